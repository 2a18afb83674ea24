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

#ifndef TABHASH_WITNESS_HPP_
#define TABHASH_WITNESS_HPP_

#include <cstddef>
#include <cstdint>
#include <span>

#include "tabhash/tabulation.hpp"

namespace tabhash {

// Among five distinct keys, finds one whose simple-tabulation hash is
// independent of the hashes of the other four (such a key always exists).
//
// The search works on the 5 x c matrix of characters:
//  1. a key holding a character that no other key has in that position is
//     independent of the rest;
//  2. otherwise every non-constant column splits the keys 3/2; constant
//     columns are dropped, each column is relabeled (twice-seen value -> 1)
//     and duplicate columns are merged;
//  3. two columns at Hamming distance 4 make the key that is 0 in both of
//     them independent;
//  4. otherwise any two columns leave two keys that agree on both; a third
//     column separating them makes the key that is 0 in all three columns
//     independent.
// When several keys qualify the lowest index is returned.
//
// Throws PreconditionError on duplicate keys or keys wider than
// params.key_bits().
std::size_t independence_witness(std::span<const std::uint64_t, 5> keys,
                                 const TabulationParams& params);

}  // namespace tabhash

#endif  // TABHASH_WITNESS_HPP_
