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

#ifndef TABHASH_TABULATION_HPP_
#define TABHASH_TABULATION_HPP_

#include <cstdint>
#include <span>
#include <vector>

namespace tabhash {

// Shape of a simple tabulation function: keys of c characters, each
// char_bits wide, hashed to out_bits-wide codes.
struct TabulationParams {
  unsigned c = 4;
  unsigned char_bits = 8;
  unsigned out_bits = 32;

  unsigned key_bits() const { return c * char_bits; }
  std::uint64_t alphabet_size() const { return std::uint64_t{1} << char_bits; }

  // Throws ConfigError unless c >= 1, 1 <= char_bits <= 16,
  // 1 <= out_bits <= 64 and c * char_bits <= 64.
  void validate() const;

  // Character `i` of `key`; character 0 is the least significant.
  std::uint64_t character(std::uint64_t key, unsigned i) const {
    return (key >> (i * char_bits)) & (alphabet_size() - 1);
  }

  friend bool operator==(const TabulationParams&, const TabulationParams&) = default;
};

// Simple tabulation: h(x) = T_0[x_0] ^ T_1[x_1] ^ ... ^ T_{c-1}[x_{c-1}].
//
// Tables are immutable once built, so a scheme may be shared by any number
// of concurrent readers.
class TabulationScheme {
 public:
  // Fills table 0 entries 0..Σ-1, then table 1, and so on, each entry being
  // the low out_bits bits of the next StrongStream(seed) word.
  static TabulationScheme from_seed(const TabulationParams& params,
                                    std::uint64_t seed);

  // `entries` holds the c tables back to back (c * Σ values); each value
  // must fit in out_bits.
  static TabulationScheme from_tables(const TabulationParams& params,
                                      std::vector<std::uint64_t> entries,
                                      std::uint64_t seed = 0);

  std::uint64_t operator()(std::uint64_t key) const;

  const TabulationParams& params() const { return params_; }
  std::uint64_t seed() const { return seed_; }

  std::span<const std::uint64_t> table(unsigned i) const;
  std::span<const std::uint64_t> entries() const { return entries_; }

 private:
  TabulationScheme(const TabulationParams& params, std::uint64_t seed,
                   std::vector<std::uint64_t> entries);

  TabulationParams params_;
  std::uint64_t seed_ = 0;
  std::uint64_t key_mask_ = 0;
  std::vector<std::uint64_t> entries_;
};

}  // namespace tabhash

#endif  // TABHASH_TABULATION_HPP_
