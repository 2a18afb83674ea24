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

#ifndef TABHASH_TRULY_RANDOM_HPP_
#define TABHASH_TRULY_RANDOM_HPP_

#include <cstdint>
#include <span>

#include "absl/container/flat_hash_map.h"
#include "tabhash/random_stream.hpp"

namespace tabhash {

// Fully random function, realized lazily: the first time a key is hashed it
// receives the next word of a seeded ChaCha20 stream and the pair is
// memoized. Memory grows with the number of distinct keys hashed.
//
// Hashing mutates the memo, so an oracle must not be shared between threads
// unless every key it will see was prepopulated first.
class TrulyRandomOracle {
 public:
  // Stream id of the value stream; the i-th distinct key queried receives
  // the i-th value of StrongStream(seed, kStreamId).
  static constexpr std::uint64_t kStreamId = 0x6f7261636c65ULL;

  TrulyRandomOracle(std::uint64_t seed, unsigned out_bits);

  std::uint64_t operator()(std::uint64_t key) const;

  void prepopulate(std::span<const std::uint64_t> keys);

  std::uint64_t seed() const { return seed_; }
  unsigned out_bits() const { return out_bits_; }
  std::size_t memo_size() const { return memo_.size(); }

 private:
  std::uint64_t seed_;
  unsigned out_bits_;
  mutable StrongStream stream_;
  mutable absl::flat_hash_map<std::uint64_t, std::uint64_t> memo_;
};

}  // namespace tabhash

#endif  // TABHASH_TRULY_RANDOM_HPP_
