#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <cstdint>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "zsqm/clifford.h"
#include "zsqm/sqm_block.h"

namespace zsqm {

/// Interned SQM blocks with memoized products and zero tests. Word-matrix
/// arithmetic is the slow part of every bracket, and a model only ever
/// produces a handful of distinct blocks.
class SqmTable {
 public:
  int intern(const SqmBlock& b);
  const SqmBlock& block(int id) const { return blocks_[static_cast<std::size_t>(id)]; }
  int product(int x, int y);
  // Is sum_t coeff_t * block(id_t) the zero word-matrix?
  bool combination_is_zero(std::vector<std::pair<int, Gaussian>> terms);
  SqmBlock combination(const std::vector<std::pair<int, Gaussian>>& terms) const;

 private:
  std::vector<SqmBlock> blocks_;
  std::map<SqmBlock, int, bool (*)(const SqmBlock&, const SqmBlock&)> index_{&less};
  std::map<std::pair<int, int>, int> products_;
  std::map<std::vector<std::tuple<int, std::int64_t, std::int64_t>>, bool> zero_memo_;

  static bool less(const SqmBlock& a, const SqmBlock& b);
};

struct TensorTerm {
  MonomialOperator clifford;
  int sqm = 0;  // id in an SqmTable
  Gaussian coeff{1, 0};
};

struct ZeroCheck {
  bool zero = true;
  std::string residual;  // description of a nonzero entry when !zero
};

// Exact test of sum_t coeff_t * clifford_t (x) sqm_t == 0.
//
// When every Clifford factor is a power-of-i multiple of the first, the sum
// factors as C (x) (combined SQM block) and one formal test decides it.
// Otherwise each row is checked entry by entry; rows sharing the same
// column-coincidence and phase pattern are evaluated once.
ZeroCheck tensor_sum_is_zero(std::span<const TensorTerm> terms, SqmTable& table);

}  // namespace zsqm
