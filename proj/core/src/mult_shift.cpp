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

#include <string>

#include "tabhash/bits.hpp"
#include "tabhash/errors.hpp"
#include "tabhash/random_stream.hpp"

namespace tabhash {

void MultShiftParams::validate() const {
  if (variant == MultShiftVariant::kUniversal ? key_bits < 1 || key_bits > 64
                                               : key_bits != 32 && key_bits != 64) {
    throw ConfigError("mult-shift: unsupported key_bits " + std::to_string(key_bits));
  }
  if (out_bits < 1 || out_bits > key_bits) {
    throw ConfigError("mult-shift: out_bits must lie in 1.." + std::to_string(key_bits));
  }
  if (variant == MultShiftVariant::kUniversal) {
    if ((a & 1) == 0) throw ConfigError("univ-mult-shift: multiplier must be odd");
    if ((a & ~low_mask(key_bits)) != 0) {
      throw ConfigError("univ-mult-shift: multiplier wider than the key");
    }
  }
}

MultShift::MultShift(const MultShiftParams& params) : params_(params) { params_.validate(); }

MultShift MultShift::from_seed(MultShiftVariant variant, unsigned key_bits, unsigned out_bits,
                               std::uint64_t seed) {
  StrongStream stream(seed);
  MultShiftParams p;
  p.variant = variant;
  p.key_bits = key_bits;
  p.out_bits = out_bits;
  if (variant == MultShiftVariant::kUniversal) {
    p.a = stream.bits(key_bits) | 1;
  } else if (key_bits == 32) {
    p.a = stream.next();
    p.b = stream.next();
  } else {
    for (auto& half : p.halves) {
      half.a1 = stream.next();
      half.a2 = stream.next();
      half.b = stream.next();
    }
  }
  return MultShift(p);
}

std::uint64_t MultShift::operator()(std::uint64_t key) const {
  const MultShiftParams& p = params_;
  if (p.key_bits < 64 && (key >> p.key_bits) != 0) {
    throw PreconditionError("mult-shift: key does not fit in " + std::to_string(p.key_bits) +
                            " bits");
  }
  if (p.variant == MultShiftVariant::kUniversal) {
    return ((p.a * key) & low_mask(p.key_bits)) >> (p.key_bits - p.out_bits);
  }
  if (p.key_bits == 32) return (p.a * key + p.b) >> (64 - p.out_bits);

  const std::uint64_t x_hi = key >> 32;
  const std::uint64_t x_lo = key & 0xffffffffULL;
  auto half = [&](const PairedMultiplier& m) {
    return ((m.a1 + x_lo) * (m.a2 + x_hi) + m.b) >> 32;
  };
  const std::uint64_t full = (half(p.halves[1]) << 32) | half(p.halves[0]);
  return full >> (64 - p.out_bits);
}

}  // namespace tabhash
