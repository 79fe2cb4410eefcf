#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "zsqm/models.h"

namespace zsqm {

struct CheckResult {
  std::string label;     // e.g. "{Q_0001,Q_0111}"
  bool pass = true;
  std::string residual;  // first nonzero entry when !pass
};

struct RelationReport {
  ModelSpec model;
  std::vector<CheckResult> pair_results;
  std::vector<CheckResult> centrality_results;
  // Brackets between central elements are many and all of one kind, so
  // only the count and the failures are kept.
  std::size_t central_pairs_checked = 0;
  std::vector<CheckResult> central_pair_failures;
  bool overall = true;

  void recompute_overall();
};

// Every ordered pair (a, b), a = b included:
//   [[Q_a, Q_b]] = 2 delta_ab H + 2 i^{1-a.b} Z_ab,
// with Z_ba taken from the antisymmetry rule for a later than b.
RelationReport check_defining_relations(const Model& model, int jobs = 1);

// [[Z, Q]] = 0, [H, Q] = 0, [H, Z] = 0 and [[Z, Z']] = 0.
RelationReport check_centrality(const Model& model, int jobs = 1);

// Both reports merged; the CLI and the mutation tests use this.
RelationReport check_all_relations(const Model& model, int jobs = 1);

/// Pairwise commute/anticommute rule for the Clifford generators of a model.
struct LemmaReport {
  std::string rule;  // "minimal", "next" or "general"
  std::size_t pairs_checked = 0;
  std::vector<std::string> failures;
  bool pass() const { return failures.empty(); }
};

// Minimal models: commute iff (a.b = 0 and a_n != b_n) or (a.b = 1 and
// a_n = b_n), anticommute otherwise. Other families: anticommute iff a.b = 0.
LemmaReport check_commutation_lemma(const Model& model);

struct DegreeRank {
  DegreeVector degree;
  std::vector<std::string> members;              // central labels
  std::vector<std::vector<std::string>> classes;  // members equal up to a power of i
  std::size_t rank = 0;
  std::string method;  // "classes" or "gram"
};

struct RankReport {
  ModelSpec model;
  std::vector<DegreeRank> degrees;  // sorted by degree bits
  std::size_t total_rank() const;
  const DegreeRank* find(const DegreeVector& d) const;
};

// Rank of the span of the central elements in each nonzero even degree,
// over exact Gaussian rationals.
RankReport central_rank(const Model& model);

struct OrbitReport {
  ModelSpec model;
  // Each orbit lists (clifford row, sqm row) indices flattened as 2*row + s.
  std::vector<std::vector<std::uint32_t>> orbits;
  std::vector<std::size_t> sizes() const;  // descending
};

// Connected components of {0..cliffdim-1} x {0,1} under the supercharges'
// nonzero pattern.
OrbitReport orbit_decomposition(const Model& model);

inline constexpr std::size_t kClosureCap = std::size_t{1} << 18;
inline constexpr std::size_t kClosureMemoryCap = std::size_t{1} << 24;  // elements x dim

// Number of distinct operators (up to a power of i) in the multiplicative
// closure of the supercharges, with A and A^dagger replaced by 1.
std::size_t count_generated_operators(const Model& model);

// Expected counts.
struct RankExpectation {
  bool pass = true;
  std::vector<std::string> notes;
};
RankExpectation check_rank_expectation(const Model& model, const RankReport& report);

}  // namespace zsqm
