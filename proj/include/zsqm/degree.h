#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace zsqm {

// Element of Z_2^n. Component a_k (1-based) is stored in bit k-1.
class DegreeVector {
 public:
  static constexpr int kMaxRank = 63;

  DegreeVector() = default;
  DegreeVector(int rank, std::uint64_t bits);

  // Components given as a_1, ..., a_n.
  static DegreeVector from_components(const std::vector<int>& components);
  // Bit string "0011" with a_1 leftmost.
  static DegreeVector parse(std::string_view text);
  static DegreeVector zero(int rank) { return DegreeVector(rank, 0); }
  static DegreeVector ones(int rank);

  int rank() const { return rank_; }
  std::uint64_t bits() const { return bits_; }
  int component(int k) const;
  int weight() const;
  int parity() const { return weight() & 1; }
  bool is_zero() const { return bits_ == 0; }
  bool is_ones() const { return *this == ones(rank_); }

  std::string to_string() const;

  DegreeVector operator+(const DegreeVector& other) const;

  friend bool operator==(const DegreeVector&, const DegreeVector&) = default;
  friend auto operator<=>(const DegreeVector&, const DegreeVector&) = default;

 private:
  int rank_ = 0;
  std::uint64_t bits_ = 0;
};

int dot(const DegreeVector& a, const DegreeVector& b);

enum class Bracket { commutator, anticommutator };

// Anticommutator iff a.b = 1.
Bracket bracket_kind(const DegreeVector& a, const DegreeVector& b);

// Sign s in [[X, Y]] = XY - s YX, i.e. (-1)^{a.b}.
inline int bracket_sign(const DegreeVector& a, const DegreeVector& b) {
  return dot(a, b) ? -1 : 1;
}

// All 2^{n-1} parity-1 degrees: ordered by weight, and within a weight
// single-1 vectors run right to left (so for n = 4: 0001, 0010, 0100, 1000,
// 0111, 1011, 1101, 1110).
std::vector<DegreeVector> enumerate_odd_degrees(int rank);

// Checks that `ordering` is a permutation of the parity-1 degrees of `rank`.
bool is_odd_degree_ordering(int rank, const std::vector<DegreeVector>& ordering);

struct AlgebraCensus {
  int rank = 0;
  std::uint64_t num_supercharges = 0;
  std::uint64_t num_central = 0;
  std::uint64_t dim_central_subspace = 0;

  friend bool operator==(const AlgebraCensus&, const AlgebraCensus&) = default;
};

AlgebraCensus census(int rank);

}  // namespace zsqm
