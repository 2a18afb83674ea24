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

#ifndef TABHASH_KEYSET_HPP_
#define TABHASH_KEYSET_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "tabhash/tabulation.hpp"

namespace tabhash {

enum class KeySetKind {
  kRandom,         // n distinct uniform keys
  kDenseInterval,  // {start, ..., start + n - 1} in shuffled order
  kHypercube,      // every key whose `dim` low characters lie in [side]
  kCuckooHard,     // [s]^3 with s = n^(1/3), one coordinate per character
  kArithmetic,     // {start + i * stride}
};

// Declarative description of a key set. generate() is a pure function of
// this description and the character shape.
struct KeySetSpec {
  KeySetKind kind = KeySetKind::kRandom;
  std::size_t n = 0;
  std::uint64_t start = 0;
  std::uint64_t stride = 1;
  std::uint64_t side = 0;  // hypercube: A; 0 means derive from n
  unsigned dim = 0;        // hypercube: dimension; 0 means params.c
  std::uint64_t seed = 0;
};

// Keys laid out on `params`' characters (character 0 least significant).
// Throws ConfigError when n does not match the kind's shape or the keys
// would not fit params.key_bits().
std::vector<std::uint64_t> generate(const KeySetSpec& spec, const TabulationParams& params);

// Text form: "random", "dense[:start=S]", "hypercube:A=32,c=4",
// "cuckoo-hard", "arith:start=S,stride=D", each optionally with ",n=N" and
// ",seed=S". `default_n` fills in n when the text omits it.
KeySetSpec parse_keyset(std::string_view text, std::size_t default_n = 0);
std::string to_string(const KeySetSpec& spec);

// Seeded Fisher-Yates shuffle.
void shuffle_keys(std::vector<std::uint64_t>& keys, std::uint64_t seed);

// Smallest key >= `from` within key_bits that is not in `keys`.
std::uint64_t first_key_outside(const std::vector<std::uint64_t>& keys, unsigned key_bits,
                                std::uint64_t from = 0);

}  // namespace tabhash

#endif  // TABHASH_KEYSET_HPP_
