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

#include "tabhash/mersenne_poly.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "tabhash/bits.hpp"
#include "tabhash/errors.hpp"
#include "tabhash/random_stream.hpp"

namespace tabhash {
namespace {

constexpr std::array<unsigned, 9> kMersenneExponents = {2, 3, 5, 7, 13, 17, 19, 31, 61};

}  // namespace

MersenneField::MersenneField(unsigned exponent) : exponent_(exponent) {
  if (std::find(kMersenneExponents.begin(), kMersenneExponents.end(), exponent) ==
      kMersenneExponents.end()) {
    throw ConfigError("2^" + std::to_string(exponent) + " - 1 is not a supported Mersenne prime");
  }
  prime_ = (std::uint64_t{1} << exponent) - 1;
}

std::uint64_t MersenneField::reduce(unsigned __int128 x) const {
  const unsigned __int128 p = prime_;
  while ((x >> exponent_) != 0) x = (x & p) + (x >> exponent_);
  auto r = static_cast<std::uint64_t>(x);
  if (r >= prime_) r -= prime_;
  return r;
}

std::uint64_t MersenneField::mul(std::uint64_t a, std::uint64_t b) const {
  return reduce(static_cast<unsigned __int128>(a) * b);
}

std::uint64_t MersenneField::add(std::uint64_t a, std::uint64_t b) const {
  return reduce(static_cast<unsigned __int128>(a) + b);
}

void MersennePolyParams::validate() const {
  const MersenneField field(exponent);
  if (coeffs.empty()) throw ConfigError("mersenne-poly: need at least one coefficient");
  for (std::uint64_t a : coeffs) {
    if (a >= field.prime()) throw ConfigError("mersenne-poly: coefficient not below p");
  }
  if (out_bits < 1 || out_bits > 64) throw ConfigError("mersenne-poly: out_bits must lie in 1..64");
}

MersennePoly::MersennePoly(MersennePolyParams params)
    : params_(std::move(params)), field_(params_.exponent), out_mask_(low_mask(params_.out_bits)) {
  params_.validate();
}

MersennePoly MersennePoly::from_seed(unsigned k, unsigned exponent, unsigned out_bits,
                                     std::uint64_t seed) {
  if (k < 1) throw ConfigError("mersenne-poly: k must be at least 1");
  const MersenneField field(exponent);
  StrongStream stream(seed);
  MersennePolyParams p;
  p.exponent = exponent;
  p.out_bits = out_bits;
  p.coeffs.resize(k);
  for (auto& a : p.coeffs) a = stream.below(field.prime());
  return MersennePoly(std::move(p));
}

std::uint64_t MersennePoly::eval_mod_p(std::uint64_t key) const {
  const std::uint64_t x = field_.reduce(key);
  const auto& a = params_.coeffs;
  std::uint64_t acc = a.back();
  for (std::size_t i = a.size() - 1; i-- > 0;) {
    acc = field_.reduce(static_cast<unsigned __int128>(acc) * x + a[i]);
  }
  return acc;
}

}  // namespace tabhash
