#include "zsqm/report.h"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace zsqm {

using nlohmann::json;

Format parse_format(std::string_view text) {
  if (text == "json") return Format::json;
  if (text == "csv") return Format::csv;
  if (text == "markdown" || text == "md") return Format::markdown;
  throw std::invalid_argument("unknown format '" + std::string(text) + "' (json, csv, markdown)");
}

json to_json(const AlgebraCensus& c) {
  return {{"n", c.rank},
          {"supercharges", c.num_supercharges},
          {"central", c.num_central},
          {"central_dim", c.dim_central_subspace}};
}

namespace {

json results(const std::vector<CheckResult>& rs, bool failures_only) {
  json out = json::array();
  for (const auto& r : rs) {
    if (failures_only && r.pass) continue;
    json j{{"bracket", r.label}, {"pass", r.pass}};
    if (!r.pass) j["residual"] = r.residual;
    out.push_back(std::move(j));
  }
  return out;
}

std::size_t count_passed(const std::vector<CheckResult>& rs) {
  std::size_t n = 0;
  for (const auto& r : rs) n += r.pass ? 1 : 0;
  return n;
}

}  // namespace

json to_json(const RelationReport& r) {
  return {{"model", r.model.selector()},
          {"overall", r.overall},
          {"pairs", {{"checked", r.pair_results.size()},
                     {"passed", count_passed(r.pair_results)},
                     {"results", results(r.pair_results, false)}}},
          {"centrality", {{"checked", r.centrality_results.size()},
                          {"passed", count_passed(r.centrality_results)},
                          {"failures", results(r.centrality_results, true)}}},
          {"central_pairs", {{"checked", r.central_pairs_checked},
                             {"failures", results(r.central_pair_failures, true)}}}};
}

json to_json(const LemmaReport& r) {
  return {{"rule", r.rule}, {"pairs", r.pairs_checked}, {"pass", r.pass()}, {"failures", r.failures}};
}

json to_json(const RankReport& r) {
  json degrees = json::array();
  for (const auto& d : r.degrees) {
    degrees.push_back({{"degree", d.degree.to_string()},
                       {"members", d.members.size()},
                       {"rank", d.rank},
                       {"method", d.method},
                       {"classes", d.classes}});
  }
  return {{"model", r.model.selector()}, {"total_rank", r.total_rank()}, {"degrees", degrees}};
}

json to_json(const OrbitReport& r) {
  return {{"model", r.model.selector()},
          {"components", r.orbits.size()},
          {"sizes", r.sizes()},
          {"note", "components are joined as a direct sum"}};
}

json to_json(const SpectrumReport& r) {
  json clusters = json::array();
  for (const auto& c : r.clusters) {
    // nine decimals keep reports stable across BLAS/compiler rounding
    const double e = std::round(c.value * 1e9) / 1e9;
    clusters.push_back({{"energy", e == 0.0 ? 0.0 : e}, {"multiplicity", c.multiplicity}});
  }
  return {{"model", r.model.selector()},
          {"realization", r.realization},
          {"total_dim", r.total_dim},
          {"tolerance", r.tolerance},
          {"zero_modes", r.zero_modes},
          {"near_zero", r.near_zero},
          {"excluded", r.excluded},
          {"levels", clusters}};
}

std::string census_table(const std::vector<AlgebraCensus>& rows, Format f) {
  std::ostringstream out;
  switch (f) {
    case Format::json: {
      json arr = json::array();
      for (const auto& c : rows) arr.push_back(to_json(c));
      out << arr.dump(2) << '\n';
      break;
    }
    case Format::csv:
      out << "n,supercharges,central,central_dim\n";
      for (const auto& c : rows) {
        out << c.rank << ',' << c.num_supercharges << ',' << c.num_central << ',' << c.dim_central_subspace
            << '\n';
      }
      break;
    case Format::markdown:
      out << "| n | #(Q) | #(Z) | dim(Z) |\n|---|---|---|---|\n";
      for (const auto& c : rows) {
        out << "| " << c.rank << " | " << c.num_supercharges << " | " << c.num_central << " | "
            << c.dim_central_subspace << " |\n";
      }
      break;
  }
  return out.str();
}

namespace {

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

std::string csv_cell(const std::string& cell) {
  if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
  std::string quoted = "\"";
  for (char ch : cell) quoted += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return quoted + "\"";
}

// Arrays of objects become tables; everything else is key/value lines.
void flatten(const json& doc, const std::string& prefix, Format f, std::ostringstream& head,
             std::ostringstream& tables) {
  for (const auto& [key, v] : doc.items()) {
    const std::string name = prefix.empty() ? key : prefix + "." + key;
    if (v.is_object()) {
      flatten(v, name, f, head, tables);
    } else if (v.is_array() && !v.empty() && v.front().is_object()) {
      std::vector<std::string> cols;
      for (const auto& [k, unused] : v.front().items()) cols.push_back(k);
      if (f == Format::markdown) {
        tables << "\n### " << name << "\n\n|";
        for (const auto& c : cols) tables << ' ' << c << " |";
        tables << "\n|";
        for (std::size_t i = 0; i < cols.size(); ++i) tables << "---|";
        tables << '\n';
        for (const auto& row : v) {
          tables << '|';
          for (const auto& c : cols) tables << ' ' << (row.contains(c) ? scalar_text(row[c]) : "") << " |";
          tables << '\n';
        }
      } else {
        tables << '\n' << name;
        for (const auto& c : cols) tables << ',' << c;
        tables << '\n';
        for (const auto& row : v) {
          tables << name;
          for (const auto& c : cols) {
            tables << ',' << csv_cell(row.contains(c) ? scalar_text(row[c]) : "");
          }
          tables << '\n';
        }
      }
    } else {
      if (f == Format::markdown) {
        head << "| " << name << " | " << scalar_text(v) << " |\n";
      } else {
        head << name << ',' << csv_cell(scalar_text(v)) << '\n';
      }
    }
  }
}

}  // namespace

std::string render(const json& doc, Format f) {
  if (f == Format::json) return doc.dump(2) + "\n";
  std::ostringstream head;
  std::ostringstream tables;
  if (f == Format::markdown) head << "| field | value |\n|---|---|\n";
  flatten(doc, "", f, head, tables);
  return head.str() + tables.str();
}

}  // namespace zsqm
