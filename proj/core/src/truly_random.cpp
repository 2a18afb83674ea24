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

#include "tabhash/truly_random.hpp"

#include "tabhash/errors.hpp"

namespace tabhash {

TrulyRandomOracle::TrulyRandomOracle(std::uint64_t seed, unsigned out_bits)
    : seed_(seed), out_bits_(out_bits), stream_(seed, kStreamId) {
  if (out_bits < 1 || out_bits > 64) throw ConfigError("random oracle: out_bits must lie in 1..64");
}

std::uint64_t TrulyRandomOracle::operator()(std::uint64_t key) const {
  auto [it, inserted] = memo_.try_emplace(key, 0);
  if (inserted) it->second = stream_.bits(out_bits_);
  return it->second;
}

void TrulyRandomOracle::prepopulate(std::span<const std::uint64_t> keys) {
  memo_.reserve(memo_.size() + keys.size());
  for (std::uint64_t k : keys) (*this)(k);
}

}  // namespace tabhash
