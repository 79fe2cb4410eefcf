#include <catch_amalgamated.hpp>

#include <random>

#include "dense_oracle.h"
#include "zsqm/sqm_block.h"

using zsqm::Gaussian;
using zsqm::LadderWord;
using zsqm::Letter;
using zsqm::SqmBlock;
using zsqm::WordSum;

namespace {

const LadderWord kA = LadderWord::letter(Letter::a);
const LadderWord kAd = LadderWord::letter(Letter::adag);

LadderWord random_word(std::mt19937& rng, int max_len) {
  LadderWord w;
  const int len = static_cast<int>(rng() % static_cast<unsigned>(max_len + 1));
  for (int i = 0; i < len; ++i) w = w * (rng() % 2 ? kA : kAd);
  return w;
}

SqmBlock random_block(std::mt19937& rng) {
  SqmBlock b;
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      const int terms = static_cast<int>(rng() % 3);
      for (int t = 0; t < terms; ++t) {
        const Gaussian g{static_cast<std::int64_t>(rng() % 7) - 3, static_cast<std::int64_t>(rng() % 7) - 3};
        b.at(r, c).add(random_word(rng, 3), g);
      }
    }
  }
  return b;
}

double dev(const oracle::Dense& a, const oracle::Dense& b) { return (a - b).cwiseAbs().maxCoeff(); }

}  // namespace

TEST_CASE("gaussian integers") {
  CHECK(Gaussian::unit(1) * Gaussian::unit(1) == Gaussian{-1, 0});
  CHECK(Gaussian::unit(-1) == Gaussian{0, -1});
  CHECK((Gaussian{2, 3} * Gaussian{1, -1}) == Gaussian{5, 1});
  CHECK(zsqm::to_string(Gaussian{1, -2}) == "(1-2i)");
  CHECK(zsqm::to_string(Gaussian{0, 1}) == "1i");
}

TEST_CASE("ladder words form a free monoid") {
  const LadderWord w = kAd * kA;
  CHECK(w.length() == 2);
  CHECK(w.to_string() == "Ad A");
  CHECK(w != kA * kAd);
  CHECK(w.adjoint() == w);
  CHECK((kA * kA * kAd).adjoint() == kA * kAd * kAd);
  CHECK(LadderWord{}.to_string() == "1");
  LadderWord long_word;
  for (int i = 0; i < LadderWord::kMaxLength; ++i) long_word = long_word * kA;
  CHECK_THROWS(long_word * kA);
}

TEST_CASE("word sums drop cancelled terms") {
  WordSum s(kA, {1, 0});
  s.add(kA, {-1, 0});
  CHECK(s.is_zero());
  WordSum t = WordSum(kA, {0, 1}) + WordSum(kAd, {2, 0});
  CHECK((t - t).is_zero());
  CHECK(t.adjoint() == WordSum(kAd, {0, -1}) + WordSum(kA, {2, 0}));
}

TEST_CASE("canonical blocks satisfy the N=1 relations") {
  const auto& b = zsqm::canonical_blocks();
  const SqmBlock one = SqmBlock::identity();
  CHECK(b.q * b.q == b.h);
  CHECK(b.s * b.s == one);
  CHECK(zsqm::anticommutator(b.q, b.s).is_zero());
  CHECK(zsqm::commutator(b.h, b.s).is_zero());
  CHECK(zsqm::commutator(b.h, b.q).is_zero());
  CHECK(b.q.adjoint() == b.q);
  CHECK(b.h.adjoint() == b.h);
  const SqmBlock iqs = (b.q * b.s).scaled_unit(1);
  CHECK(iqs.adjoint() == iqs);
  CHECK(iqs * iqs == b.h);
  CHECK(zsqm::anticommutator(b.q, iqs).is_zero());
  CHECK(b.h.at(0, 0) == WordSum(kAd * kA, {1, 0}));
  CHECK(b.h.at(1, 1) == WordSum(kA * kAd, {1, 0}));
  CHECK(b.q.at(0, 1) == WordSum(kAd, {1, 0}));
  CHECK(b.q.at(1, 0) == WordSum(kA, {1, 0}));
}

TEST_CASE("proportionality of blocks") {
  const auto& b = zsqm::canonical_blocks();
  REQUIRE(zsqm::proportional(b.q.scaled_unit(3), b.q).has_value());
  CHECK(*zsqm::proportional(b.q.scaled_unit(3), b.q) == 3);
  CHECK_FALSE(zsqm::proportional(b.h, b.h * b.s).has_value());
  CHECK_FALSE(zsqm::proportional(b.q.scaled({2, 0}), b.q).has_value());
  CHECK_FALSE(zsqm::proportional(b.q, SqmBlock::zero()).has_value());
}

TEST_CASE("block arithmetic is a homomorphism into matrices over any A") {
  std::mt19937 rng(99);
  const oracle::FreeRealization real(3, 1234);
  for (int trial = 0; trial < 200; ++trial) {
    const SqmBlock x = random_block(rng);
    const SqmBlock y = random_block(rng);
    const auto dx = real.block(x);
    const auto dy = real.block(y);
    const double scale = 1.0 + dx.norm() * dy.norm();
    CHECK(dev(real.block(x * y), dx * dy) <= 1e-11 * scale);
    CHECK(dev(real.block(x + y), dx + dy) <= 1e-11 * scale);
    CHECK(dev(real.block(x.adjoint()), dx.adjoint()) <= 1e-11 * scale);
    CHECK((x * y).adjoint() == y.adjoint() * x.adjoint());
    CHECK((x - x).is_zero());
  }
}
