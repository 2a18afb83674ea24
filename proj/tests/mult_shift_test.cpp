// Copyright 2026 The Tabhash Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tabhash/mult_shift.hpp"

#include <cstdint>

#include "gtest/gtest.h"
#include "tabhash/errors.hpp"

namespace tabhash {
namespace {

MultShift univ(unsigned key_bits, unsigned out_bits, std::uint64_t a) {
  MultShiftParams p;
  p.variant = MultShiftVariant::kUniversal;
  p.key_bits = key_bits;
  p.out_bits = out_bits;
  p.a = a;
  return MultShift(p);
}

TEST(UnivMultShiftTest, Examples) {
  EXPECT_EQ(univ(32, 32, 1)(0xdeadbeef), 0xdeadbeefu);
  EXPECT_EQ(univ(8, 4, 3)(5), 0u);
  EXPECT_EQ(univ(32, 1, 0xFFFFFFFF)(1), 1u);
  EXPECT_EQ(univ(8, 4, 3)(100), (300u % 256) >> 4);
  EXPECT_EQ(univ(64, 64, 3)(~std::uint64_t{0}), ~std::uint64_t{0} - 2);
}

TEST(UnivMultShiftTest, RejectsBadParameters) {
  EXPECT_THROW(univ(32, 8, 2), ConfigError);
  EXPECT_THROW(univ(8, 4, 0x101), ConfigError);
  EXPECT_THROW(univ(8, 9, 1), ConfigError);
  EXPECT_THROW(univ(0, 1, 1), ConfigError);
  EXPECT_THROW(univ(8, 4, 3)(256), PreconditionError);
}

// Over all odd multipliers, two distinct 8-bit keys collide in 4 output
// bits with probability at most 2 / 2^4.
TEST(UnivMultShiftTest, ExhaustiveCollisionBound) {
  std::vector<MultShift> family;
  for (std::uint64_t a = 1; a < 256; a += 2) family.push_back(univ(8, 4, a));
  double worst = 0;
  for (std::uint64_t x = 0; x < 256; ++x) {
    for (std::uint64_t y = x + 1; y < 256; ++y) {
      int collisions = 0;
      for (const auto& h : family) collisions += h(x) == h(y);
      const double p = static_cast<double>(collisions) / static_cast<double>(family.size());
      worst = std::max(worst, p);
      ASSERT_LE(p, 2.0 / 16) << x << "," << y;
    }
  }
  EXPECT_GT(worst, 1.0 / 16);
}

TEST(TwoIndepMultShiftTest, Examples32) {
  MultShiftParams p;
  p.variant = MultShiftVariant::kTwoIndependent;
  p.key_bits = 32;
  p.out_bits = 20;
  p.a = 0;
  p.b = 0;
  const MultShift zero(p);
  for (std::uint64_t key : {0ULL, 1ULL, 0xffffffffULL}) EXPECT_EQ(zero(key), 0u);

  p.a = std::uint64_t{1} << 63;
  for (unsigned out : {1u, 7u, 32u}) {
    p.out_bits = out;
    EXPECT_EQ(MultShift(p)(1), (std::uint64_t{1} << 63) >> (64 - out)) << out;
  }
  p.a = 0x123456789abcdef1ULL;
  p.b = 0x0fedcba987654321ULL;
  p.out_bits = 32;
  EXPECT_EQ(MultShift(p)(0x89abcdef), (p.a * 0x89abcdefULL + p.b) >> 32);
  const MultShift h(p);
  EXPECT_THROW(h(0x100000000ULL), PreconditionError);
}

TEST(TwoIndepMultShiftTest, PairedVariant64) {
  MultShiftParams p;
  p.variant = MultShiftVariant::kTwoIndependent;
  p.key_bits = 64;
  p.out_bits = 64;
  const std::uint64_t b = 0xcafef00d12345678ULL;
  p.halves[0] = {0, 0, b};
  p.halves[1] = {0, 0, b};
  const MultShift h(p);
  // a1 = a2 = 0 leaves x_lo * x_hi + b; key 0 gives b >> 32 in both halves.
  EXPECT_EQ(h(0), 0xcafef00dcafef00dULL);
  EXPECT_EQ(h(0x0000000100000000ULL), 0xcafef00dcafef00dULL);  // x_lo = 0

  p.halves[0] = {3, 5, 7};
  p.halves[1] = {11, 13, 17};
  p.out_bits = 16;
  const MultShift g(p);
  const std::uint64_t key = 0x0123456789abcdefULL;
  const std::uint64_t lo = key & 0xffffffff, hi = key >> 32;
  const std::uint64_t h0 = ((3 + lo) * (5 + hi) + 7) >> 32;
  const std::uint64_t h1 = ((11 + lo) * (13 + hi) + 17) >> 32;
  EXPECT_EQ(g(key), ((h1 << 32) | h0) >> 48);
}

TEST(MultShiftTest, FromSeed) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto h = MultShift::from_seed(MultShiftVariant::kUniversal, 32, 16, seed);
    EXPECT_EQ(h.params().a & 1, 1u);
    EXPECT_LT(h.params().a, std::uint64_t{1} << 32);
  }
  const auto a = MultShift::from_seed(MultShiftVariant::kTwoIndependent, 64, 32, 4);
  const auto b = MultShift::from_seed(MultShiftVariant::kTwoIndependent, 64, 32, 4);
  EXPECT_EQ(a(12345), b(12345));
  EXPECT_THROW(MultShift::from_seed(MultShiftVariant::kTwoIndependent, 16, 8, 1), ConfigError);
}

}  // namespace
}  // namespace tabhash
