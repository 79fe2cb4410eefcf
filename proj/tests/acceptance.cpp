// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "dense_oracle.h"
#include "zsqm/degree.h"
#include "zsqm/error.h"
#include "zsqm/models.h"
#include "zsqm/parallel.h"
#include "zsqm/report.h"
#include "zsqm/spectrum.h"
#include "zsqm/tensor_check.h"
#include "zsqm/verify.h"

namespace {

using namespace zsqm;

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back(what);
    }
  }
};

struct Criterion {
  int id;
  std::string title;
  double time_limit;  // seconds; 0 = none
  std::function<Outcome()> run;
};

std::vector<std::string> relation_model_set() {
  std::vector<std::string> out;
  for (int n = 2; n <= 7; ++n) out.push_back("minimal:n=" + std::to_string(n));
  for (int n = 2; n <= 6; ++n) out.push_back("next:n=" + std::to_string(n));
  for (int n = 2; n <= 5; ++n) out.push_back("maximal:n=" + std::to_string(n));
  for (const char* t : {"n4cl12", "n4cl10", "n5cl28", "n5cl26"}) out.emplace_back(t);
  return out;
}

const std::vector<Model>& relation_models() {
  static const std::vector<Model> models = [] {
    std::vector<Model> m;
    for (const auto& s : relation_model_set()) m.push_back(build_model(ModelSpec::parse(s)));
    return m;
  }();
  return models;
}

int jobs() { return default_jobs(); }

Outcome census_criterion() {
  Outcome out;
  const std::uint64_t table[][3] = {{2, 1, 1},       {4, 6, 2},         {8, 28, 4},
                                    {16, 120, 8},    {32, 496, 16},     {64, 2016, 32},
                                    {128, 8128, 64}, {256, 32640, 128}, {512, 130816, 256}};
  for (int n = 2; n <= 10; ++n) {
    const auto c = census(n);
    const auto* row = table[n - 2];
    out.require(c.num_supercharges == row[0] && c.num_central == row[1] && c.dim_central_subspace == row[2],
                "census row n=" + std::to_string(n));
  }
  return out;
}

Outcome relations_criterion() {
  Outcome out;
  for (const auto& m : relation_models()) {
    const auto r = check_defining_relations(m, jobs());
    out.require(r.overall, m.spec.selector() + " defining relations");
  }
  return out;
}

// Brackets of the next:n=3 vanishing table: (supercharge degree or subspace, subspace,
// anticommutator?). Every element of each subspace is checked.
Outcome vanishing_table(const Model& m) {
  Outcome out;
  auto index_of = [&](const std::string& d) {
    const auto deg = DegreeVector::parse(d);
    for (std::size_t k = 0; k < m.degrees.size(); ++k) {
      if (m.degrees[k] == deg) return static_cast<int>(k);
    }
    throw std::logic_error("degree missing from next:n=3 model");
  };
  // subspaces spanned by pairs of central elements
  auto subspace = [&](const std::string& d) {
    std::vector<GradedOperator> out_ops;
    const std::vector<std::pair<std::string, std::string>> spans =
        d == "110"   ? std::vector<std::pair<std::string, std::string>>{{"100", "010"}, {"001", "111"}}
        : d == "101" ? std::vector<std::pair<std::string, std::string>>{{"100", "001"}, {"010", "111"}}
                     : std::vector<std::pair<std::string, std::string>>{{"010", "001"}, {"100", "111"}};
    for (const auto& [a, b] : spans) out_ops.push_back(m.central_any(index_of(a), index_of(b)));
    return out_ops;
  };
  struct Row {
    std::string left;
    bool left_is_q;
    std::string right;
    bool anti;
  };
  const std::vector<Row> rows{
      {"100", true, "110", true},   {"100", true, "101", true},   {"100", true, "011", false},
      {"010", true, "110", true},   {"010", true, "011", true},   {"010", true, "101", false},
      {"001", true, "101", true},   {"001", true, "011", true},   {"001", true, "110", false},
      {"111", true, "110", false},  {"111", true, "101", false},  {"111", true, "011", false},
      {"110", false, "110", false}, {"110", false, "101", true},  {"110", false, "011", true},
      {"101", false, "101", false}, {"101", false, "011", true},  {"011", false, "011", false},
  };
  SqmTable table;
  for (const auto& row : rows) {
    std::vector<GradedOperator> lefts;
    if (row.left_is_q) {
      lefts.push_back(m.supercharges[static_cast<std::size_t>(index_of(row.left))]);
    } else {
      lefts = subspace(row.left);
    }
    for (const auto& x : lefts) {
      for (const auto& y : subspace(row.right)) {
        const bool anti = bracket_kind(x.degree, y.degree) == Bracket::anticommutator;
        out.require(anti == row.anti, "bracket kind for " + row.left + " with " + row.right);
        std::vector<TensorTerm> terms;
        const int sx = table.intern(x.sqm);
        const int sy = table.intern(y.sqm);
        terms.push_back({x.clifford * y.clifford, table.product(sx, sy), {1, 0}});
        terms.push_back({y.clifford * x.clifford, table.product(sy, sx), {row.anti ? 1 : -1, 0}});
        out.require(tensor_sum_is_zero(terms, table).zero, "next:n=3 bracket " + row.left + " with " + row.right);
      }
    }
  }
  return out;
}

Outcome centrality_criterion() {
  Outcome out;
  for (const auto& m : relation_models()) {
    const auto r = check_centrality(m, jobs());
    out.require(r.overall, m.spec.selector() + " centrality");
  }
  const auto vanishing = vanishing_table(build_next(3));
  out.require(vanishing.pass, "next:n=3 vanishing table");
  for (const auto& n : vanishing.notes) out.notes.push_back(n);
  return out;
}

Outcome lemma_criterion() {
  Outcome out;
  for (const auto& m : relation_models()) {
    const auto l = check_commutation_lemma(m);
    out.require(l.pass() && l.pairs_checked == m.num_supercharges() * (m.num_supercharges() - 1) / 2,
                m.spec.selector() + " generator lemma (" + l.rule + ")");
  }
  return out;
}

Outcome rank_criterion() {
  Outcome out;
  for (const auto& m : relation_models()) {
    const auto report = central_rank(m);
    const auto e = check_rank_expectation(m, report);
    out.require(e.pass, m.spec.selector() + " rank profile");
    for (const auto& d : report.degrees) {
      out.require(d.rank >= 1 && d.rank <= std::min(d.members.size(), std::size_t{1} << (m.spec.n - 2)),
                  m.spec.selector() + " rank bounds at " + d.degree.to_string());
    }
    if (m.spec.family == Family::n4cl10) {
      const auto* d = report.find(DegreeVector::parse("1100"));
      out.require(d && d->rank < 4, "n4cl10 degree 1100 rank below 4");
    }
  }
  return out;
}

Outcome spectrum_criterion() {
  Outcome out;
  struct Case {
    const char* model;
    std::size_t ground;
    std::size_t excited;
  };
  const auto r = NumericRealization::fock(8);
  for (const Case c : {Case{"minimal:n=3", 4, 8}, Case{"next:n=3", 8, 16}, Case{"maximal:n=3", 8, 16}}) {
    const Model m = build_model(ModelSpec::parse(c.model));
    const auto sp = spectrum(m, r);
    const std::string tag(c.model);
    out.require(sp.zero_modes == c.ground, tag + " zero modes");
    out.require(sp.clusters.size() == 8, tag + " eight levels below the cutoff");
    for (std::size_t k = 0; k < sp.clusters.size(); ++k) {
      const auto& cl = sp.clusters[k];
      out.require(std::abs(cl.value - std::round(cl.value)) <= 1e-9, tag + " level off integer");
      out.require(std::lround(cl.value) == static_cast<long>(k), tag + " level order");
      out.require(cl.multiplicity == (k == 0 ? c.ground : c.excited), tag + " multiplicity at " + std::to_string(k));
    }
  }
  return out;
}

Outcome orbit_criterion() {
  Outcome out;
  for (int n = 2; n <= 5; ++n) {
    const Model m = build_next(n);
    const auto sizes = orbit_decomposition(m).sizes();
    const std::vector<std::size_t> want = n % 2 == 0
                                              ? std::vector<std::size_t>{std::size_t{1} << n, std::size_t{1} << n}
                                              : std::vector<std::size_t>{std::size_t{1} << (n + 1)};
    out.require(sizes == want, "next:n=" + std::to_string(n) + " orbit sizes");

    auto reversed = enumerate_odd_degrees(n);
    std::reverse(reversed.begin(), reversed.end());
    out.require(orbit_decomposition(build_next(n, reversed)).sizes() == sizes,
                "next:n=" + std::to_string(n) + " orbit sizes under reversed ordering");
  }
  return out;
}

Outcome count_criterion() {
  Outcome out;
  for (int n = 2; n <= 6; ++n) {
    out.require(count_generated_operators(build_minimal(n)) == (std::size_t{1} << n),
                "minimal:n=" + std::to_string(n) + " count");
    const std::size_t next_want = std::size_t{1} << (n % 2 ? n + 1 : n);
    out.require(count_generated_operators(build_next(n)) == next_want, "next:n=" + std::to_string(n) + " count");
  }
  for (int n = 2; n <= 4; ++n) {
    out.require(count_generated_operators(build_maximal(n)) == (std::size_t{1} << (1 << (n - 1))),
                "maximal:n=" + std::to_string(n) + " count");
  }
  return out;
}

Outcome mutation_criterion() {
  Outcome out;
  const std::vector<std::string> targets{"minimal:n=2", "minimal:n=3", "minimal:n=4", "minimal:n=5",
                                         "next:n=2",    "next:n=3",    "next:n=4",    "next:n=5",
                                         "maximal:n=2", "maximal:n=3", "maximal:n=4", "n4cl12",
                                         "n4cl10",      "n5cl26",      "n5cl28"};
  std::mt19937 rng(20240611);
  const int trials = 40;
  int detected = 0;
  for (int t = 0; t < trials; ++t) {
    const auto& sel = targets[static_cast<std::size_t>(t) % targets.size()];
    const auto spec = ModelSpec::parse(sel);
    auto gens = family_generators(spec);
    const std::size_t k = rng() % gens.size();
    const std::size_t row = rng() % gens[k].dim();
    const int shift = 1 + static_cast<int>(rng() % 3);
    gens[k] = gens[k].with_row_phase_shift(row, shift);
    const Model bad = assemble(spec, gens);
    bool caught = !check_commutation_lemma(bad).pass();
    if (!caught) caught = !check_defining_relations(bad, jobs()).overall;
    if (!caught) caught = !check_centrality(bad, jobs()).overall;
    if (caught) {
      ++detected;
    } else {
      out.require(false, sel + " generator " + std::to_string(k + 1) + " row " + std::to_string(row) +
                             " shift " + std::to_string(shift) + " undetected");
    }
  }
  out.notes.insert(out.notes.begin(), std::to_string(detected) + "/" + std::to_string(trials) + " detected");
  return out;
}

Outcome oracle_criterion() {
  Outcome out;
  std::mt19937 rng(777);
  double worst = 0.0;
  for (int t = 0; t < 1000; ++t) {
    const int pairs = 1 + static_cast<int>(rng() % 4);  // dim 2..16
    const int len = 1 + static_cast<int>(rng() % 8);
    auto word = MonomialOperator::identity(std::size_t{1} << pairs);
    oracle::Dense dense = oracle::Dense::Identity(1 << pairs, 1 << pairs);
    for (int i = 0; i < len; ++i) {
      const int j = 1 + static_cast<int>(rng() % static_cast<unsigned>(pairs));
      switch (rng() % 5) {
        case 0:
          word = word * gamma(j, pairs);
          dense = dense * oracle::gamma(j, pairs);
          break;
        case 1:
          word = word * gamma_tilde(j, pairs);
          dense = dense * oracle::gamma_tilde(j, pairs);
          break;
        case 2:
          word = word * big_gamma(j, pairs);
          dense = dense * oracle::big_gamma(j, pairs);
          break;
        case 3:
          word = word.scaled(1);
          dense = oracle::cd(0, 1) * dense;
          break;
        default:
          word = word.adjoint();
          dense = dense.adjoint().eval();
          break;
      }
    }
    worst = std::max(worst, (oracle::to_dense(word) - dense).cwiseAbs().maxCoeff());
  }
  std::ostringstream msg;
  msg << "max abs deviation " << worst;
  out.require(worst == 0.0, msg.str());
  if (worst == 0.0) out.notes.push_back(msg.str());
  return out;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "census table n=2..10", 1.0, census_criterion},
      {2, "defining relations, exact", 60.0, relations_criterion},
      {3, "centrality incl. next:n=3 vanishing table", 0.0, centrality_criterion},
      {4, "generator commutation lemmas", 0.0, lemma_criterion},
      {5, "central rank profiles", 10.0, rank_criterion},
      {6, "harmonic spectral degeneracy", 10.0, spectrum_criterion},
      {7, "orbit decomposition of next models", 0.0, orbit_criterion},
      {8, "generated operator counts", 0.0, count_criterion},
      {9, "single-phase mutations detected", 0.0, mutation_criterion},
      {10, "monomial vs dense oracle", 0.0, oracle_criterion},
  };

  // model construction is shared by criteria 2-5; build it up front
  relation_models();

  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.time_limit > 0 && secs > c.time_limit) {
      std::ostringstream msg;
      msg << "took " << secs << " s, limit " << c.time_limit << " s";
      o.require(false, msg.str());
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.title << " ("
              << static_cast<long>(std::lround(secs * 1000)) << " ms)";
    for (const auto& n : o.notes) std::cout << "; " << n;
    std::cout << '\n';
    if (!o.pass) ++failed;
  }
  std::cout << (failed ? "FAILED " + std::to_string(failed) + " of " : std::string("all ")) << criteria.size()
            << " criteria" << (failed ? "" : " passed") << '\n';
  return failed ? 1 : 0;
}
