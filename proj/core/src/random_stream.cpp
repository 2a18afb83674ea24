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

#include "tabhash/random_stream.hpp"

#include <sodium.h>

#include <algorithm>
#include <cstring>
#include <mutex>
#include <stdexcept>

#include "tabhash/bits.hpp"

namespace tabhash {
namespace {

void ensure_sodium() {
  static std::once_flag once;
  std::call_once(once, [] {
    if (sodium_init() < 0) throw std::runtime_error("libsodium initialization failed");
  });
}

void store_le64(std::uint8_t* out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out[i] = static_cast<std::uint8_t>(v >> (8 * i));
}

std::uint64_t load_le64(const std::uint8_t* in) {
  std::uint64_t v = 0;
  for (int i = 7; i >= 0; --i) v = (v << 8) | in[i];
  return v;
}

}  // namespace

StrongStream::StrongStream(std::uint64_t seed, std::uint64_t stream_id) {
  ensure_sodium();
  store_le64(key_.data(), seed);
  store_le64(key_.data() + 8, stream_id);
}

StrongStream::StrongStream(std::span<const std::uint8_t, 32> key,
                           std::span<const std::uint8_t, 12> nonce,
                           std::uint32_t initial_block)
    : block_(initial_block) {
  ensure_sodium();
  std::copy(key.begin(), key.end(), key_.begin());
  std::copy(nonce.begin(), nonce.end(), nonce_.begin());
}

void StrongStream::refill() {
  static constexpr std::size_t kBytes = kBufferWords * 8;
  static constexpr std::uint32_t kBlocks = kBytes / 64;
  alignas(16) static const std::uint8_t zeros[kBytes] = {};
  std::uint8_t raw[kBytes];
  crypto_stream_chacha20_ietf_xor_ic(raw, zeros, kBytes, nonce_.data(), block_,
                                     key_.data());
  for (std::size_t i = 0; i < kBufferWords; ++i) buffer_[i] = load_le64(raw + 8 * i);
  const std::uint32_t before = block_;
  block_ += kBlocks;
  if (block_ < before) {
    // 32-bit block counter wrapped; continue on the next nonce.
    for (auto& byte : nonce_) {
      if (++byte != 0) break;
    }
  }
  pos_ = 0;
}

std::uint64_t StrongStream::next() {
  if (pos_ == kBufferWords) refill();
  return buffer_[pos_++];
}

std::uint64_t StrongStream::bits(unsigned width) { return next() & low_mask(width); }

std::uint64_t StrongStream::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("StrongStream::below: bound must be positive");
  if (is_power_of_two(bound)) return next() & (bound - 1);
  // Reject the top partial block so every residue is equally likely.
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound + 1) % bound;
  for (;;) {
    const std::uint64_t v = next();
    if (v <= limit) return v % bound;
  }
}

void StrongStream::fill(std::span<std::uint8_t> out) {
  std::size_t i = 0;
  while (i < out.size()) {
    const std::uint64_t w = next();
    for (int b = 0; b < 8 && i < out.size(); ++b, ++i) {
      out[i] = static_cast<std::uint8_t>(w >> (8 * b));
    }
  }
}

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t s = master;
  const std::uint64_t a = splitmix64(s);
  std::uint64_t t = a ^ (index * 0xd1342543de82ef95ULL);
  splitmix64(t);
  return splitmix64(t);
}

}  // namespace tabhash
