#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace zsqm {

struct Gaussian {
  std::int64_t re = 0;
  std::int64_t im = 0;

  static Gaussian unit(int k);  // i^k

  bool is_zero() const { return re == 0 && im == 0; }
  Gaussian conj() const { return {re, -im}; }

  Gaussian& operator+=(const Gaussian& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
  friend Gaussian operator-(const Gaussian& a, const Gaussian& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend Gaussian operator-(const Gaussian& a) { return {-a.re, -a.im}; }
  friend Gaussian operator*(const Gaussian& a, const Gaussian& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(const Gaussian&, const Gaussian&) = default;
};

std::string to_string(const Gaussian& g);

enum class Letter : std::uint8_t { a = 0, adag = 1 };

/// Word in the free monoid on {A, A^dagger}. No rewriting: A A^dagger and
/// A^dagger A are different words.
class LadderWord {
 public:
  static constexpr int kMaxLength = 64;

  LadderWord() = default;
  static LadderWord letter(Letter l);

  int length() const { return length_; }
  Letter at(int i) const { return static_cast<Letter>((bits_ >> i) & 1U); }
  LadderWord adjoint() const;
  std::string to_string() const;

  friend LadderWord operator*(const LadderWord& x, const LadderWord& y);
  friend bool operator==(const LadderWord&, const LadderWord&) = default;
  friend auto operator<=>(const LadderWord&, const LadderWord&) = default;

 private:
  // length first so shorter words sort first
  std::uint8_t length_ = 0;
  std::uint64_t bits_ = 0;
};

/// Finite Z[i]-linear combination of ladder words.
class WordSum {
 public:
  WordSum() = default;
  WordSum(const LadderWord& w, Gaussian c);
  static WordSum constant(Gaussian c) { return WordSum(LadderWord{}, c); }

  const std::map<LadderWord, Gaussian>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const LadderWord& w, const Gaussian& c);
  WordSum scaled(const Gaussian& c) const;
  WordSum adjoint() const;
  std::string to_string() const;

  WordSum& operator+=(const WordSum& o);
  friend WordSum operator+(WordSum a, const WordSum& b) { return a += b; }
  friend WordSum operator-(const WordSum& a, const WordSum& b);
  friend WordSum operator*(const WordSum& a, const WordSum& b);
  friend bool operator==(const WordSum&, const WordSum&) = default;

 private:
  std::map<LadderWord, Gaussian> terms_;
};

/// 2x2 matrix of word sums: the exact, realization-free N=1 SQM factor.
class SqmBlock {
 public:
  SqmBlock() = default;

  static SqmBlock zero() { return {}; }
  static SqmBlock scalar(Gaussian c);
  static SqmBlock identity() { return scalar({1, 0}); }

  const WordSum& at(int row, int col) const { return entries_[2 * row + col]; }
  WordSum& at(int row, int col) { return entries_[2 * row + col]; }

  bool is_zero() const;
  SqmBlock scaled(const Gaussian& c) const;
  SqmBlock scaled_unit(int k) const { return scaled(Gaussian::unit(k)); }
  SqmBlock adjoint() const;
  // 1 where the entry is a nonzero word sum.
  std::array<std::array<bool, 2>, 2> pattern() const;
  std::string to_string() const;

  SqmBlock& operator+=(const SqmBlock& o);
  friend SqmBlock operator+(SqmBlock a, const SqmBlock& b) { return a += b; }
  friend SqmBlock operator-(const SqmBlock& a, const SqmBlock& b);
  friend SqmBlock operator*(const SqmBlock& a, const SqmBlock& b);
  friend bool operator==(const SqmBlock&, const SqmBlock&) = default;

 private:
  std::array<WordSum, 4> entries_;
};

// k with x = i^k y, if such a power of i exists and y is nonzero.
std::optional<int> proportional(const SqmBlock& x, const SqmBlock& y);

SqmBlock commutator(const SqmBlock& x, const SqmBlock& y);
SqmBlock anticommutator(const SqmBlock& x, const SqmBlock& y);

struct CanonicalBlocks {
  SqmBlock q;  // [[0, A^dag], [A, 0]]
  SqmBlock h;  // diag(A^dag A, A A^dag)
  SqmBlock s;  // diag(1, -1)
};

const CanonicalBlocks& canonical_blocks();

}  // namespace zsqm
