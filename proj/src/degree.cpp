#include "zsqm/degree.h"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "zsqm/error.h"

namespace zsqm {

namespace {

void require_rank(int rank) {
  if (rank < 1 || rank > DegreeVector::kMaxRank) {
    throw std::out_of_range("degree rank must lie in [1, 63], got " + std::to_string(rank));
  }
}

void require_same_rank(const DegreeVector& a, const DegreeVector& b) {
  if (a.rank() != b.rank()) {
    throw DimensionError("degree length mismatch: " + std::to_string(a.rank()) + " vs " +
                         std::to_string(b.rank()));
  }
}

}  // namespace

DegreeVector::DegreeVector(int rank, std::uint64_t bits) : rank_(rank), bits_(bits) {
  require_rank(rank);
  if (bits >> rank) throw std::invalid_argument("degree bits exceed rank");
}

DegreeVector DegreeVector::from_components(const std::vector<int>& components) {
  const int rank = static_cast<int>(components.size());
  require_rank(rank);
  std::uint64_t bits = 0;
  for (int k = 0; k < rank; ++k) {
    if (components[k] != 0 && components[k] != 1) {
      throw std::invalid_argument("degree components must be 0 or 1");
    }
    bits |= static_cast<std::uint64_t>(components[k]) << k;
  }
  return DegreeVector(rank, bits);
}

DegreeVector DegreeVector::parse(std::string_view text) {
  std::vector<int> components;
  for (char c : text) {
    if (c != '0' && c != '1') throw std::invalid_argument("degree string must be binary");
    components.push_back(c - '0');
  }
  return from_components(components);
}

DegreeVector DegreeVector::ones(int rank) {
  require_rank(rank);
  return DegreeVector(rank, rank == 64 ? ~0ULL : (1ULL << rank) - 1);
}

int DegreeVector::component(int k) const {
  if (k < 1 || k > rank_) throw std::out_of_range("degree component index out of range");
  return static_cast<int>((bits_ >> (k - 1)) & 1U);
}

int DegreeVector::weight() const { return std::popcount(bits_); }

std::string DegreeVector::to_string() const {
  std::string out(rank_, '0');
  for (int k = 0; k < rank_; ++k) {
    if ((bits_ >> k) & 1U) out[k] = '1';
  }
  return out;
}

DegreeVector DegreeVector::operator+(const DegreeVector& other) const {
  require_same_rank(*this, other);
  return DegreeVector(rank_, bits_ ^ other.bits_);
}

int dot(const DegreeVector& a, const DegreeVector& b) {
  require_same_rank(a, b);
  return std::popcount(a.bits() & b.bits()) & 1;
}

Bracket bracket_kind(const DegreeVector& a, const DegreeVector& b) {
  return dot(a, b) ? Bracket::anticommutator : Bracket::commutator;
}

std::vector<DegreeVector> enumerate_odd_degrees(int rank) {
  if (rank < 2 || rank > 20) {
    throw std::out_of_range("odd-degree enumeration needs 2 <= n <= 20");
  }
  std::vector<std::uint64_t> raw;
  raw.reserve(std::size_t{1} << (rank - 1));
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << rank); ++bits) {
    if (std::popcount(bits) & 1) raw.push_back(bits);
  }
  // a_1 sits in the lowest bit, so "right to left" is descending raw value.
  std::sort(raw.begin(), raw.end(), [](std::uint64_t x, std::uint64_t y) {
    const int wx = std::popcount(x);
    const int wy = std::popcount(y);
    if (wx != wy) return wx < wy;
    return x > y;
  });
  std::vector<DegreeVector> out;
  out.reserve(raw.size());
  for (auto bits : raw) out.emplace_back(rank, bits);
  return out;
}

bool is_odd_degree_ordering(int rank, const std::vector<DegreeVector>& ordering) {
  if (ordering.size() != (std::size_t{1} << (rank - 1))) return false;
  std::vector<std::uint64_t> seen;
  for (const auto& d : ordering) {
    if (d.rank() != rank || d.parity() != 1) return false;
    seen.push_back(d.bits());
  }
  std::sort(seen.begin(), seen.end());
  return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

AlgebraCensus census(int rank) {
  if (rank < 2 || rank > 32) throw std::out_of_range("census needs 2 <= n <= 32");
  AlgebraCensus c;
  c.rank = rank;
  c.num_supercharges = std::uint64_t{1} << (rank - 1);
  c.dim_central_subspace = std::uint64_t{1} << (rank - 2);
  c.num_central = c.dim_central_subspace * (c.num_supercharges - 1);
  return c;
}

}  // namespace zsqm
