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

#ifndef TABHASH_BITS_HPP_
#define TABHASH_BITS_HPP_

#include <bit>
#include <cstdint>

namespace tabhash {

// All-ones mask of the low `width` bits, width in 0..64.
constexpr std::uint64_t low_mask(unsigned width) {
  return width >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1;
}

constexpr bool is_power_of_two(std::uint64_t x) { return std::has_single_bit(x); }

constexpr unsigned log2_exact(std::uint64_t power_of_two) {
  return static_cast<unsigned>(std::countr_zero(power_of_two));
}

// Bin of an out_bits-wide hash among m = 2^lg_m bins: its top lg_m bits.
constexpr std::uint64_t top_bits(std::uint64_t hash, unsigned out_bits,
                                 unsigned lg_m) {
  return lg_m == 0 ? 0 : hash >> (out_bits - lg_m);
}

}  // namespace tabhash

#endif  // TABHASH_BITS_HPP_
