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

#ifndef TABHASH_MULT_SHIFT_HPP_
#define TABHASH_MULT_SHIFT_HPP_

#include <array>
#include <cstdint>

namespace tabhash {

enum class MultShiftVariant {
  kUniversal,       // h_a(x) = (a*x mod 2^l) >> (l - l_out), a odd
  kTwoIndependent,  // h_{a,b}(x) = (a*x + b mod 2^{2l}) >> (2l - l_out)
};

// One half of the 64-bit-key 2-independent scheme:
// ((a1 + x_lo) * (a2 + x_hi) + b) >> 32, arithmetic mod 2^64.
struct PairedMultiplier {
  std::uint64_t a1 = 0;
  std::uint64_t a2 = 0;
  std::uint64_t b = 0;
};

struct MultShiftParams {
  MultShiftVariant variant = MultShiftVariant::kUniversal;
  unsigned key_bits = 32;  // universal: 1..64; two-independent: 32 or 64
  unsigned out_bits = 32;  // 1..key_bits

  // Universal: the odd key_bits-wide multiplier.
  // Two-independent with 32-bit keys: the 64-bit multiplier and offset.
  std::uint64_t a = 1;
  std::uint64_t b = 0;

  // Two-independent with 64-bit keys: halves[0] yields the low 32 output
  // bits, halves[1] the high 32.
  std::array<PairedMultiplier, 2> halves{};

  void validate() const;
};

class MultShift {
 public:
  explicit MultShift(const MultShiftParams& params);

  // Random parameters; the universal multiplier is forced odd.
  static MultShift from_seed(MultShiftVariant variant, unsigned key_bits,
                             unsigned out_bits, std::uint64_t seed);

  std::uint64_t operator()(std::uint64_t key) const;

  const MultShiftParams& params() const { return params_; }

 private:
  MultShiftParams params_;
};

}  // namespace tabhash

#endif  // TABHASH_MULT_SHIFT_HPP_
