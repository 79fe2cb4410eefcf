#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "zsqm/degree.h"
#include "zsqm/error.h"
#include "zsqm/models.h"
#include "zsqm/parallel.h"
#include "zsqm/realization.h"
#include "zsqm/report.h"
#include "zsqm/spectrum.h"
#include "zsqm/verify.h"

namespace {

using nlohmann::json;
using namespace zsqm;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct RealizationOptions {
  std::optional<int> fock;
  bool grid = false;
  int points = GridSettings{}.points;
  double spacing = GridSettings{}.spacing;
  std::optional<double> x_min;
  std::string w = "x";
  std::string w_table;

  bool requested() const { return fock.has_value() || grid; }

  NumericRealization build() const {
    if (!grid) return NumericRealization::fock(fock.value_or(FockSettings{}.cutoff));
    GridSettings g;
    g.points = points;
    g.spacing = spacing;
    g.x_min = x_min;
    g.w = w_table.empty() ? Superpotential::parse(w) : Superpotential::from_table(w_table);
    return NumericRealization::grid(std::move(g));
  }
};

struct OutputOptions {
  std::string format = "json";
  std::string out;
};

void add_realization_options(CLI::App* cmd, RealizationOptions& r) {
  auto* fock = cmd->add_option("--fock", r.fock, "Harmonic Fock realization with cutoff N")
                   ->check(CLI::Range(1, 1 << 14));
  auto* grid = cmd->add_flag("--grid", r.grid, "Finite-difference realization on a uniform grid");
  fock->excludes(grid);
  cmd->add_option("--points", r.points, "Grid nodes")->check(CLI::Range(3, 1 << 16));
  cmd->add_option("--spacing", r.spacing, "Grid spacing")->check(CLI::PositiveNumber);
  cmd->add_option("--xmin", r.x_min, "Left grid node (default: grid centred on 0)");
  auto* w = cmd->add_option("--W", r.w, "Superpotential expression in x");
  auto* table = cmd->add_option("--W-table", r.w_table, "Superpotential table: rows of 'x W'")
                    ->check(CLI::ExistingFile);
  w->excludes(table);
}

void add_output_options(CLI::App* cmd, OutputOptions& o) {
  cmd->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "markdown"}));
  cmd->add_option("--out", o.out, "Write the report here instead of stdout");
}

void emit(const std::string& text, const OutputOptions& o) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(o.out);
  if (!file) throw std::invalid_argument("cannot write to " + o.out);
  file << text;
}

int run_census(int from, int to, const OutputOptions& o) {
  if (from < 2 || to > 10 || from > to) {
    throw std::invalid_argument("census needs 2 <= from <= to <= 10");
  }
  std::vector<AlgebraCensus> rows;
  for (int n = from; n <= to; ++n) rows.push_back(census(n));
  emit(census_table(rows, parse_format(o.format)), o);
  return kExitPass;
}

struct VerifyOptions {
  std::string model;
  bool rank = false;
  bool orbits = false;
  bool count = false;
  int jobs = 1;
};

int run_verify(const VerifyOptions& v, const RealizationOptions& r, const OutputOptions& o) {
  const Model model = build_model(ModelSpec::parse(v.model));
  json doc;
  doc["model"] = model.spec.selector();
  doc["dimension"] = model.total_dim();
  bool pass = true;

  const RelationReport relations = check_all_relations(model, v.jobs);
  doc["relations"] = to_json(relations);
  pass = pass && relations.overall;

  const LemmaReport lemma = check_commutation_lemma(model);
  doc["generator_lemma"] = to_json(lemma);
  pass = pass && lemma.pass();

  if (v.rank) {
    const RankReport rank = central_rank(model);
    const RankExpectation expect = check_rank_expectation(model, rank);
    doc["rank"] = to_json(rank);
    doc["rank"]["expected"] = expect.pass;
    doc["rank"]["notes"] = expect.notes;
    pass = pass && expect.pass;
  }
  if (v.orbits) doc["orbits"] = to_json(orbit_decomposition(model));
  if (v.count) doc["generated_operators"] = count_generated_operators(model);
  if (r.requested()) {
    const NumericRealization real = r.build();
    const SpectrumReport sp = spectrum(model, real);
    const SpectrumExpectation expect = check_spectrum_expectation(model, sp, real);
    doc["spectrum"] = to_json(sp);
    doc["spectrum"]["expected"] = expect.pass;
    doc["spectrum"]["notes"] = expect.notes;
    pass = pass && expect.pass;
  }
  doc["pass"] = pass;
  emit(render(doc, parse_format(o.format)), o);
  return pass ? kExitPass : kExitFail;
}

int run_spectrum(const std::string& selector, const RealizationOptions& r, const OutputOptions& o) {
  const Model model = build_model(ModelSpec::parse(selector));
  const NumericRealization real = r.build();
  const SpectrumReport sp = spectrum(model, real);
  const SpectrumExpectation expect = check_spectrum_expectation(model, sp, real);
  json doc = to_json(sp);
  doc["expected"] = expect.pass;
  doc["notes"] = expect.notes;
  emit(render(doc, parse_format(o.format)), o);
  return expect.pass ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks for Z2^n-graded supersymmetric quantum mechanics models"};
  app.set_config("--config", "", "Read options from a key=value file");
  app.require_subcommand(1);

  int census_from = 2;
  int census_to = 10;
  OutputOptions census_out;
  auto* census_cmd = app.add_subcommand("census", "Supercharge and central-element counts");
  census_cmd->add_option("--from", census_from, "Smallest n");
  census_cmd->add_option("--to", census_to, "Largest n");
  add_output_options(census_cmd, census_out);

  VerifyOptions verify;
  verify.jobs = default_jobs();
  RealizationOptions verify_real;
  OutputOptions verify_out;
  auto* verify_cmd = app.add_subcommand("verify", "Check the algebra relations of a model");
  verify_cmd->add_option("--model", verify.model, "minimal:n=4, next:n=3, maximal:n=4, n4cl12, ...")
      ->required();
  verify_cmd->add_flag("--rank", verify.rank, "Rank of each central-element subspace");
  verify_cmd->add_flag("--orbits", verify.orbits, "Orbit decomposition of the tensor basis");
  verify_cmd->add_flag("--count", verify.count, "Size of the algebra generated by the supercharges");
  verify_cmd->add_option("--jobs", verify.jobs, "Worker threads")->check(CLI::Range(1, 256));
  add_realization_options(verify_cmd, verify_real);
  add_output_options(verify_cmd, verify_out);

  std::string spectrum_model;
  RealizationOptions spectrum_real;
  OutputOptions spectrum_out;
  auto* spectrum_cmd = app.add_subcommand("spectrum", "Energy levels and degeneracies");
  spectrum_cmd->add_option("--model", spectrum_model, "Model selector")->required();
  add_realization_options(spectrum_cmd, spectrum_real);
  add_output_options(spectrum_cmd, spectrum_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*census_cmd) return run_census(census_from, census_to, census_out);
    if (*verify_cmd) return run_verify(verify, verify_real, verify_out);
    if (*spectrum_cmd) return run_spectrum(spectrum_model, spectrum_real, spectrum_out);
  } catch (const CapacityError& e) {
    std::cerr << "zsqm: capacity: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "zsqm: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "zsqm: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
