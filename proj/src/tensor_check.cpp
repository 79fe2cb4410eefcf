#include "zsqm/tensor_check.h"

#include <algorithm>
#include <stdexcept>
#include <tuple>
#include <unordered_map>

#include "zsqm/error.h"

namespace zsqm {

namespace {

bool less_words(const WordSum& a, const WordSum& b) {
  return std::lexicographical_compare(
      a.terms().begin(), a.terms().end(), b.terms().begin(), b.terms().end(),
      [](const auto& x, const auto& y) {
        return std::tie(x.first, x.second.re, x.second.im) <
               std::tie(y.first, y.second.re, y.second.im);
      });
}

}  // namespace

bool SqmTable::less(const SqmBlock& a, const SqmBlock& b) {
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      if (less_words(a.at(r, c), b.at(r, c))) return true;
      if (less_words(b.at(r, c), a.at(r, c))) return false;
    }
  }
  return false;
}

int SqmTable::intern(const SqmBlock& b) {
  auto it = index_.find(b);
  if (it != index_.end()) return it->second;
  const int id = static_cast<int>(blocks_.size());
  blocks_.push_back(b);
  index_.emplace(b, id);
  return id;
}

int SqmTable::product(int x, int y) {
  auto key = std::make_pair(x, y);
  auto it = products_.find(key);
  if (it != products_.end()) return it->second;
  const int id = intern(block(x) * block(y));
  products_.emplace(key, id);
  return id;
}

SqmBlock SqmTable::combination(const std::vector<std::pair<int, Gaussian>>& terms) const {
  SqmBlock acc;
  for (const auto& [id, c] : terms) acc += block(id).scaled(c);
  return acc;
}

bool SqmTable::combination_is_zero(std::vector<std::pair<int, Gaussian>> terms) {
  std::vector<std::tuple<int, std::int64_t, std::int64_t>> key;
  key.reserve(terms.size());
  for (const auto& [id, c] : terms) key.emplace_back(id, c.re, c.im);
  std::sort(key.begin(), key.end());
  auto it = zero_memo_.find(key);
  if (it != zero_memo_.end()) return it->second;
  const bool zero = combination(terms).is_zero();
  zero_memo_.emplace(std::move(key), zero);
  return zero;
}

ZeroCheck tensor_sum_is_zero(std::span<const TensorTerm> terms, SqmTable& table) {
  if (terms.empty()) return {};
  const std::size_t dim = terms[0].clifford.dim();
  for (const auto& t : terms) {
    if (t.clifford.dim() != dim) throw DimensionError("tensor terms differ in Clifford dimension");
  }

  // fast path: one proportionality class
  std::vector<std::pair<int, Gaussian>> combined;
  bool single_class = true;
  for (const auto& t : terms) {
    auto k = proportional(t.clifford, terms[0].clifford);
    if (!k) {
      single_class = false;
      break;
    }
    combined.emplace_back(t.sqm, t.coeff * Gaussian::unit(*k));
  }
  if (single_class) {
    if (table.combination_is_zero(combined)) return {};
    ZeroCheck out{false, ""};
    out.residual = "row 0, col " + std::to_string(terms[0].clifford.col(0)) + ": " +
                   table.combination(combined).scaled(Gaussian::unit(terms[0].clifford.phase(0))).to_string();
    return out;
  }

  // general path: entry (r, c) collects every term whose row r lands in column c
  const std::size_t n = terms.size();
  if (n > 10) throw CapacityError("too many tensor terms for the row-pattern check");
  std::unordered_map<std::uint64_t, bool> seen;
  for (std::size_t r = 0; r < dim; ++r) {
    std::uint64_t key = 0;
    std::vector<int> group(n);
    for (std::size_t t = 0; t < n; ++t) {
      std::size_t g = t;
      for (std::size_t u = 0; u < t; ++u) {
        if (terms[u].clifford.col(r) == terms[t].clifford.col(r)) {
          g = static_cast<std::size_t>(group[u]);
          break;
        }
      }
      group[t] = static_cast<int>(g);
      key |= (static_cast<std::uint64_t>(g) | (static_cast<std::uint64_t>(terms[t].clifford.phase(r)) << 4)) << (6 * t);
    }
    auto [it, inserted] = seen.try_emplace(key, true);
    if (!inserted) {
      if (it->second) continue;
    } else {
      for (std::size_t g = 0; g < n && it->second; ++g) {
        std::vector<std::pair<int, Gaussian>> entry;
        for (std::size_t t = 0; t < n; ++t) {
          if (static_cast<std::size_t>(group[t]) != g) continue;
          entry.emplace_back(terms[t].sqm, terms[t].coeff * Gaussian::unit(terms[t].clifford.phase(r)));
        }
        if (!entry.empty() && !table.combination_is_zero(entry)) it->second = false;
      }
      if (it->second) continue;
    }
    // report the first offending entry of this row
    for (std::size_t g = 0; g < n; ++g) {
      std::vector<std::pair<int, Gaussian>> entry;
      for (std::size_t t = 0; t < n; ++t) {
        if (static_cast<std::size_t>(group[t]) != g) continue;
        entry.emplace_back(terms[t].sqm, terms[t].coeff * Gaussian::unit(terms[t].clifford.phase(r)));
      }
      if (entry.empty()) continue;
      SqmBlock v = table.combination(entry);
      if (!v.is_zero()) {
        return {false, "row " + std::to_string(r) + ", col " +
                           std::to_string(terms[g].clifford.col(r)) + ": " + v.to_string()};
      }
    }
  }
  return {};
}

}  // namespace zsqm
