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

#ifndef TABHASH_RANDOM_STREAM_HPP_
#define TABHASH_RANDOM_STREAM_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>

namespace tabhash {

// Reproducible ChaCha20 (IETF variant) keystream read as little-endian
// 64-bit words. Every random table entry, coefficient and key set in the
// library is drawn from one of these.
//
// The 256-bit key holds `seed` in bytes 0..7 and `stream_id` in bytes 8..15;
// the remaining key bytes and the nonce are zero.
class StrongStream {
 public:
  explicit StrongStream(std::uint64_t seed, std::uint64_t stream_id = 0);
  StrongStream(std::span<const std::uint8_t, 32> key,
               std::span<const std::uint8_t, 12> nonce,
               std::uint32_t initial_block = 0);

  std::uint64_t next();

  // Low `width` bits of the next word; width in 0..64.
  std::uint64_t bits(unsigned width);

  // Uniform value in [0, bound) by rejection; bound > 0.
  std::uint64_t below(std::uint64_t bound);

  // Raw keystream bytes, continuing from the current word boundary.
  void fill(std::span<std::uint8_t> out);

 private:
  static constexpr std::size_t kBufferWords = 64;

  void refill();

  std::array<std::uint8_t, 32> key_{};
  std::array<std::uint8_t, 12> nonce_{};
  std::uint32_t block_ = 0;
  std::array<std::uint64_t, kBufferWords> buffer_{};
  std::size_t pos_ = kBufferWords;
};

// One step of the splitmix64 sequence; advances `state`.
std::uint64_t splitmix64(std::uint64_t& state);

// Child seed number `index` of `master`. Distinct indices give unrelated
// seeds; used for per-trial and per-role seeding.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

}  // namespace tabhash

#endif  // TABHASH_RANDOM_STREAM_HPP_
