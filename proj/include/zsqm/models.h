#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "zsqm/clifford.h"
#include "zsqm/degree.h"
#include "zsqm/sqm_block.h"

namespace zsqm {

enum class Family { minimal, next, maximal, n4cl12, n4cl10, n5cl28, n5cl26 };

inline constexpr int kRankCap = 8;
inline constexpr int kMaximalRankCap = 5;

/// Which model to build. An empty ordering means the default from
/// enumerate_odd_degrees; the fixed-table families accept only that one.
struct ModelSpec {
  Family family = Family::minimal;
  int n = 2;
  std::vector<DegreeVector> ordering;

  // "minimal:n=4", "next:n=3", "maximal:n=4", "n4cl12", "n4cl10", "n5cl28", "n5cl26"
  static ModelSpec parse(std::string_view selector);
  std::string selector() const;

  int clifford_pairs() const;  // m in Cl(2m)
  std::size_t clifford_dim() const { return std::size_t{1} << clifford_pairs(); }
  std::size_t total_dim() const { return 2 * clifford_dim(); }
  std::vector<DegreeVector> effective_ordering() const;
  void validate() const;
};

std::string family_name(Family f);

enum class Role { hamiltonian, supercharge, central };

/// clifford (x) sqm, carrying its Z_2^n degree. Supercharge k and central
/// (k, l) refer to positions in the model's degree ordering.
struct GradedOperator {
  MonomialOperator clifford;
  SqmBlock sqm;
  DegreeVector degree;
  Role role = Role::hamiltonian;
  int first = -1;
  int second = -1;

  std::size_t total_dim() const { return 2 * clifford.dim(); }
};

struct Model {
  ModelSpec spec;
  // "X" (minimal), "Y" (next) or "G" (maximal and fixed tables)
  std::string generator_symbol;
  std::vector<DegreeVector> degrees;
  // Clifford factor that defines each supercharge (X_a, Y_a or G_k);
  // the identity for Q_1 of the odd-n next model.
  std::vector<MonomialOperator> generators;
  GradedOperator hamiltonian;
  std::vector<GradedOperator> supercharges;
  // Z_{kl} for k < l, row-major over k.
  std::vector<GradedOperator> centrals;

  std::size_t num_supercharges() const { return supercharges.size(); }
  std::size_t clifford_dim() const { return hamiltonian.clifford.dim(); }
  std::size_t total_dim() const { return hamiltonian.total_dim(); }

  std::size_t central_index(int k, int l) const;
  const GradedOperator& central(int k, int l) const { return centrals[central_index(k, l)]; }
  // Z_{kl} for any k != l; for k > l it is -(-1)^{a_k.a_l} Z_{lk}.
  GradedOperator central_any(int k, int l) const;

  std::string supercharge_label(int k) const;
  std::string central_label(int k, int l) const;
};

// h(a) = sum_{j<k<=n-1} a_j a_k, in Z_4. Requires p(a) = 1.
int phase_h_minimal(const DegreeVector& a);
// h(a) = sum_{j<k<=n} a_j a_k, in Z_4.
int phase_h_next(const DegreeVector& a);

Model build_model(const ModelSpec& spec);
Model build_minimal(int n, std::vector<DegreeVector> ordering = {});
Model build_next(int n, std::vector<DegreeVector> ordering = {});
Model build_maximal(int n, std::vector<DegreeVector> ordering = {});
Model build_n4_cl12();
Model build_n4_cl10();
Model build_n5_cl28();
Model build_n5_cl26();

// Default-ordering generators of a family (X_a, Y_a or G_k), unchecked.
std::vector<MonomialOperator> family_generators(const ModelSpec& spec);

// Derives H, Q and Z from generator matrices the way the family does,
// without the hermiticity/idempotency gate that build_* applies. Edited
// generators (negative controls) go through here.
Model assemble(const ModelSpec& spec, std::vector<MonomialOperator> generators);

// Product of Clifford factors written as in the fixed tables: tokens
// "gK" (gamma_K), "tK" (gamma~_K), "GK" (i gamma_K gamma~_K) and "i",
// multiplied left to right in Cl(2 * pairs).
MonomialOperator clifford_word(std::string_view text, int pairs);

}  // namespace zsqm
