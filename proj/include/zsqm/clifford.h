#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace zsqm {

// Powers of i are carried as exponents in Z_4.
using Phase = std::uint8_t;

inline Phase phase_add(int a, int b) { return static_cast<Phase>(((a + b) % 4 + 4) % 4); }

/// Matrix with exactly one nonzero entry per row and column, each entry a
/// power of i. Row r holds i^phase(r) in column col(r).
///
/// Every tensor product of Pauli matrices has this shape, so products and
/// adjoints reduce to O(dim) integer work.
class MonomialOperator {
 public:
  MonomialOperator() = default;
  MonomialOperator(std::vector<std::uint32_t> columns, std::vector<Phase> phases);

  static MonomialOperator identity(std::size_t dim);
  static MonomialOperator diagonal(std::vector<Phase> phases);

  std::size_t dim() const { return columns_.size(); }
  std::uint32_t col(std::size_t row) const { return columns_[row]; }
  Phase phase(std::size_t row) const { return phases_[row]; }
  std::span<const std::uint32_t> columns() const { return columns_; }
  std::span<const Phase> phases() const { return phases_; }

  MonomialOperator adjoint() const;
  // Multiply by the scalar i^k.
  MonomialOperator scaled(int k) const;
  // Multiply row `row` alone by i^k (used to build negative controls).
  MonomialOperator with_row_phase_shift(std::size_t row, int k) const;

  bool is_diagonal() const;
  bool is_identity() const;
  // i^k if this equals i^k times the identity.
  std::optional<int> scalar_value() const;
  bool is_hermitian() const;
  bool is_involution() const;

  struct Entry {
    std::uint32_t row;
    std::uint32_t col;
    Phase phase;
  };
  // Row-major (row, col, phase exponent) triples.
  std::vector<Entry> entries() const;
  std::string debug_string() const;

  friend MonomialOperator operator*(const MonomialOperator& x, const MonomialOperator& y);
  friend bool operator==(const MonomialOperator&, const MonomialOperator&) = default;

 private:
  std::vector<std::uint32_t> columns_;
  std::vector<Phase> phases_;
};

MonomialOperator mul(const MonomialOperator& x, const MonomialOperator& y);

// Returns k with x = i^k y, or nothing if x and y are not scalar multiples.
std::optional<int> proportional(const MonomialOperator& x, const MonomialOperator& y);

bool commutes(const MonomialOperator& x, const MonomialOperator& y);
bool anticommutes(const MonomialOperator& x, const MonomialOperator& y);

MonomialOperator kron(const MonomialOperator& a, const MonomialOperator& b);

enum class Pauli : std::uint8_t { identity, x, y, z };

MonomialOperator pauli(Pauli p);

// Tensor product of Pauli factors, leftmost factor most significant.
MonomialOperator pauli_string(std::span<const Pauli> factors);

// Hermitian irreducible representation of Cl(2m) on C^{2^m}:
//   gamma_1 = s1^{(x)m},
//   gamma_j = s1^{(x)(m-j+1)} (x) s3 (x) 1^{(x)(j-2)},   2 <= j <= m,
//   gamma~_j = s1^{(x)(m-j)} (x) s2 (x) 1^{(x)(j-1)},    1 <= j <= m.
MonomialOperator gamma(int j, int pairs);
MonomialOperator gamma_tilde(int j, int pairs);
// i gamma_j gamma~_j: diagonal, hermitian, squares to one.
MonomialOperator big_gamma(int j, int pairs);

}  // namespace zsqm
