#include "zsqm/sqm_block.h"

#include <sstream>
#include <stdexcept>

namespace zsqm {

Gaussian Gaussian::unit(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0:
      return {1, 0};
    case 1:
      return {0, 1};
    case 2:
      return {-1, 0};
    default:
      return {0, -1};
  }
}

std::string to_string(const Gaussian& g) {
  std::ostringstream os;
  if (g.im == 0) {
    os << g.re;
  } else if (g.re == 0) {
    os << g.im << "i";
  } else {
    os << '(' << g.re << (g.im < 0 ? "-" : "+") << (g.im < 0 ? -g.im : g.im) << "i)";
  }
  return os.str();
}

LadderWord LadderWord::letter(Letter l) {
  LadderWord w;
  w.length_ = 1;
  w.bits_ = static_cast<std::uint64_t>(l);
  return w;
}

LadderWord LadderWord::adjoint() const {
  LadderWord w;
  w.length_ = length_;
  for (int i = 0; i < length_; ++i) {
    const std::uint64_t flipped = ((bits_ >> i) & 1U) ^ 1U;
    w.bits_ |= flipped << (length_ - 1 - i);
  }
  return w;
}

std::string LadderWord::to_string() const {
  if (length_ == 0) return "1";
  std::string out;
  for (int i = 0; i < length_; ++i) {
    if (i) out += ' ';
    out += at(i) == Letter::a ? "A" : "Ad";
  }
  return out;
}

LadderWord operator*(const LadderWord& x, const LadderWord& y) {
  if (x.length_ + y.length_ > LadderWord::kMaxLength) {
    throw std::length_error("ladder word longer than 64 letters");
  }
  LadderWord w;
  w.length_ = static_cast<std::uint8_t>(x.length_ + y.length_);
  w.bits_ = x.bits_ | (y.length_ ? (y.bits_ << x.length_) : 0);
  return w;
}

WordSum::WordSum(const LadderWord& w, Gaussian c) { add(w, c); }

void WordSum::add(const LadderWord& w, const Gaussian& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

WordSum WordSum::scaled(const Gaussian& c) const {
  WordSum out;
  if (c.is_zero()) return out;
  for (const auto& [w, v] : terms_) out.terms_.emplace(w, v * c);
  return out;
}

WordSum WordSum::adjoint() const {
  WordSum out;
  for (const auto& [w, v] : terms_) out.add(w.adjoint(), v.conj());
  return out;
}

std::string WordSum::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, v] : terms_) {
    if (!first) out += " + ";
    first = false;
    out += zsqm::to_string(v) + "*[" + w.to_string() + "]";
  }
  return out;
}

WordSum& WordSum::operator+=(const WordSum& o) {
  for (const auto& [w, v] : o.terms_) add(w, v);
  return *this;
}

WordSum operator-(const WordSum& a, const WordSum& b) {
  WordSum out = a;
  for (const auto& [w, v] : b.terms_) out.add(w, -v);
  return out;
}

WordSum operator*(const WordSum& a, const WordSum& b) {
  WordSum out;
  for (const auto& [wa, va] : a.terms_) {
    for (const auto& [wb, vb] : b.terms_) out.add(wa * wb, va * vb);
  }
  return out;
}

SqmBlock SqmBlock::scalar(Gaussian c) {
  SqmBlock b;
  b.at(0, 0) = WordSum::constant(c);
  b.at(1, 1) = WordSum::constant(c);
  return b;
}

bool SqmBlock::is_zero() const {
  for (const auto& e : entries_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

SqmBlock SqmBlock::scaled(const Gaussian& c) const {
  SqmBlock out;
  for (int k = 0; k < 4; ++k) out.entries_[k] = entries_[k].scaled(c);
  return out;
}

SqmBlock SqmBlock::adjoint() const {
  SqmBlock out;
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) out.at(c, r) = at(r, c).adjoint();
  }
  return out;
}

std::array<std::array<bool, 2>, 2> SqmBlock::pattern() const {
  return {{{!at(0, 0).is_zero(), !at(0, 1).is_zero()}, {!at(1, 0).is_zero(), !at(1, 1).is_zero()}}};
}

std::string SqmBlock::to_string() const {
  return "[[" + at(0, 0).to_string() + ", " + at(0, 1).to_string() + "], [" +
         at(1, 0).to_string() + ", " + at(1, 1).to_string() + "]]";
}

SqmBlock& SqmBlock::operator+=(const SqmBlock& o) {
  for (int k = 0; k < 4; ++k) entries_[k] += o.entries_[k];
  return *this;
}

SqmBlock operator-(const SqmBlock& a, const SqmBlock& b) {
  SqmBlock out;
  for (int k = 0; k < 4; ++k) out.entries_[k] = a.entries_[k] - b.entries_[k];
  return out;
}

SqmBlock operator*(const SqmBlock& a, const SqmBlock& b) {
  SqmBlock out;
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      out.at(r, c) = a.at(r, 0) * b.at(0, c) + a.at(r, 1) * b.at(1, c);
    }
  }
  return out;
}

std::optional<int> proportional(const SqmBlock& x, const SqmBlock& y) {
  if (y.is_zero()) return std::nullopt;
  for (int k = 0; k < 4; ++k) {
    if (x == y.scaled_unit(k)) return k;
  }
  return std::nullopt;
}

SqmBlock commutator(const SqmBlock& x, const SqmBlock& y) { return x * y - y * x; }

SqmBlock anticommutator(const SqmBlock& x, const SqmBlock& y) { return x * y + y * x; }

const CanonicalBlocks& canonical_blocks() {
  static const CanonicalBlocks blocks = [] {
    const auto a = LadderWord::letter(Letter::a);
    const auto ad = LadderWord::letter(Letter::adag);
    CanonicalBlocks b;
    b.q.at(0, 1) = WordSum(ad, {1, 0});
    b.q.at(1, 0) = WordSum(a, {1, 0});
    b.h.at(0, 0) = WordSum(ad * a, {1, 0});
    b.h.at(1, 1) = WordSum(a * ad, {1, 0});
    b.s.at(0, 0) = WordSum::constant({1, 0});
    b.s.at(1, 1) = WordSum::constant({-1, 0});
    return b;
  }();
  return blocks;
}

}  // namespace zsqm
