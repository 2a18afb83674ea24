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

#ifndef TABHASH_TAB_PRNG_HPP_
#define TABHASH_TAB_PRNG_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <vector>

#include "tabhash/mersenne_poly.hpp"

namespace tabhash {

// Pseudorandom generator built on simple tabulation with two lopsided
// characters: output i is T1[i / R] ^ T2[i % R], where T2 is a table of R
// random words and T1 is never stored but evaluated by a random polynomial
// mod 2^61 - 1 once per row of R outputs.
//
// A stream has a single owner; independent streams may run concurrently.
class TabPrng {
 public:
  static constexpr unsigned kExponent = 61;

  // R a power of two, degree >= 0 (degree + 1 coefficients), out_bits in
  // 1..61. T2 comes first from StrongStream(seed), then the coefficients.
  static TabPrng create(std::uint64_t seed, std::size_t row_length = 1024, unsigned degree = 32,
                        unsigned out_bits = 32);

  TabPrng(std::vector<std::uint64_t> row_table, MersennePoly row_poly);

  std::uint64_t next();

  std::size_t row_length() const { return row_table_.size(); }
  std::uint64_t row_index() const { return row_index_; }
  std::size_t col_index() const { return col_index_; }
  std::uint64_t row_value() const { return row_value_; }
  unsigned out_bits() const { return row_poly_.params().out_bits; }
  std::span<const std::uint64_t> row_table() const { return row_table_; }
  const MersennePoly& row_poly() const { return row_poly_; }

 private:
  std::vector<std::uint64_t> row_table_;
  MersennePoly row_poly_;
  std::uint64_t row_index_ = 0;
  std::size_t col_index_ = 0;
  std::uint64_t row_value_ = 0;
};

// Golden stream file. Layout (little-endian):
//   "TPRG", u32 version (1), u64 seed, u32 R, u32 degree, u32 out_bits,
//   u32 count, then `count` u64 words.
struct PrngGolden {
  std::uint64_t seed = 0;
  std::uint32_t row_length = 0;
  std::uint32_t degree = 0;
  std::uint32_t out_bits = 0;
  std::vector<std::uint64_t> words;
};

PrngGolden make_prng_golden(std::uint64_t seed, std::uint32_t row_length, std::uint32_t degree,
                            std::uint32_t out_bits, std::uint32_t count);
void write_prng_golden(std::ostream& out, const PrngGolden& golden);
PrngGolden read_prng_golden(std::istream& in);
void save_prng_golden(const std::filesystem::path& path, const PrngGolden& golden);
PrngGolden load_prng_golden(const std::filesystem::path& path);

}  // namespace tabhash

#endif  // TABHASH_TAB_PRNG_HPP_
