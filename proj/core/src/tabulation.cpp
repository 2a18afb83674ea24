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

#include "tabhash/tabulation.hpp"

#include <string>

#include "tabhash/bits.hpp"
#include "tabhash/errors.hpp"
#include "tabhash/random_stream.hpp"

namespace tabhash {

void TabulationParams::validate() const {
  if (c < 1) throw ConfigError("tabulation: c must be at least 1");
  if (char_bits < 1 || char_bits > 16) {
    throw ConfigError("tabulation: char_bits must lie in 1..16, got " +
                      std::to_string(char_bits));
  }
  if (out_bits < 1 || out_bits > 64) {
    throw ConfigError("tabulation: out_bits must lie in 1..64, got " +
                      std::to_string(out_bits));
  }
  if (c * char_bits > 64) {
    throw ConfigError("tabulation: c * char_bits = " + std::to_string(c * char_bits) +
                      " exceeds 64");
  }
}

TabulationScheme::TabulationScheme(const TabulationParams& params, std::uint64_t seed,
                                   std::vector<std::uint64_t> entries)
    : params_(params),
      seed_(seed),
      key_mask_(low_mask(params.key_bits())),
      entries_(std::move(entries)) {}

TabulationScheme TabulationScheme::from_seed(const TabulationParams& params,
                                             std::uint64_t seed) {
  params.validate();
  StrongStream stream(seed);
  std::vector<std::uint64_t> entries(params.c * params.alphabet_size());
  for (auto& e : entries) e = stream.bits(params.out_bits);
  return TabulationScheme(params, seed, std::move(entries));
}

TabulationScheme TabulationScheme::from_tables(const TabulationParams& params,
                                               std::vector<std::uint64_t> entries,
                                               std::uint64_t seed) {
  params.validate();
  if (entries.size() != params.c * params.alphabet_size()) {
    throw ConfigError("tabulation: expected " +
                      std::to_string(params.c * params.alphabet_size()) +
                      " table entries, got " + std::to_string(entries.size()));
  }
  const std::uint64_t mask = low_mask(params.out_bits);
  for (std::uint64_t e : entries) {
    if ((e & ~mask) != 0) throw ConfigError("tabulation: table entry wider than out_bits");
  }
  return TabulationScheme(params, seed, std::move(entries));
}

std::uint64_t TabulationScheme::operator()(std::uint64_t key) const {
  if ((key & ~key_mask_) != 0) {
    throw PreconditionError("tabulation: key does not fit in " +
                            std::to_string(params_.key_bits()) + " bits");
  }
  const unsigned bits = params_.char_bits;
  const std::uint64_t char_mask = params_.alphabet_size() - 1;
  const std::uint64_t sigma = params_.alphabet_size();
  const std::uint64_t* table = entries_.data();
  std::uint64_t h = 0;
  for (unsigned i = 0; i < params_.c; ++i, key >>= bits, table += sigma) {
    h ^= table[key & char_mask];
  }
  return h;
}

std::span<const std::uint64_t> TabulationScheme::table(unsigned i) const {
  const std::uint64_t sigma = params_.alphabet_size();
  return std::span<const std::uint64_t>(entries_).subspan(i * sigma, sigma);
}

}  // namespace tabhash
