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

#include "tabhash/keyset.hpp"

#include <cmath>
#include <map>
#include <string>

#include "absl/container/flat_hash_set.h"
#include "tabhash/bits.hpp"
#include "tabhash/errors.hpp"
#include "tabhash/random_stream.hpp"

namespace tabhash {
namespace {

constexpr std::uint64_t kKeyStream = 0x6b657973ULL;      // "keys"
constexpr std::uint64_t kShuffleStream = 0x73687566ULL;  // "shuf"

// Exact integer root: r with r^k == n, or 0 if none exists.
std::uint64_t exact_root(std::uint64_t n, unsigned k) {
  if (n == 0 || k == 0) return 0;
  auto r = static_cast<std::uint64_t>(std::llround(std::pow(static_cast<double>(n), 1.0 / k)));
  for (std::uint64_t cand = r > 0 ? r - 1 : 0; cand <= r + 1; ++cand) {
    unsigned __int128 p = 1;
    for (unsigned i = 0; i < k && p <= n; ++i) p *= cand;
    if (p == n) return cand;
  }
  return 0;
}

std::uint64_t universe_size_minus_one(unsigned key_bits) { return low_mask(key_bits); }

std::vector<std::uint64_t> random_keys(std::size_t n, unsigned key_bits, std::uint64_t seed) {
  const std::uint64_t max_key = universe_size_minus_one(key_bits);
  if (key_bits < 64 && n > max_key + 1) {
    throw ConfigError("keyset: " + std::to_string(n) + " distinct keys do not fit in " +
                      std::to_string(key_bits) + " bits");
  }
  std::vector<std::uint64_t> keys;
  keys.reserve(n);
  if (key_bits < 64 && n > (max_key + 1) / 2) {
    // Dense request: shuffle the whole universe and keep a prefix.
    keys.resize(max_key + 1);
    for (std::uint64_t k = 0; k <= max_key; ++k) keys[k] = k;
    shuffle_keys(keys, seed);
    keys.resize(n);
    return keys;
  }
  StrongStream stream(seed, kKeyStream);
  absl::flat_hash_set<std::uint64_t> seen;
  seen.reserve(n);
  while (keys.size() < n) {
    const std::uint64_t k = stream.bits(key_bits);
    if (seen.insert(k).second) keys.push_back(k);
  }
  return keys;
}

std::uint64_t parse_u64(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const std::uint64_t v = std::stoull(text, &used, 0);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("keyset: bad value '" + text + "' for " + what);
  }
}

}  // namespace

void shuffle_keys(std::vector<std::uint64_t>& keys, std::uint64_t seed) {
  StrongStream stream(seed, kShuffleStream);
  for (std::size_t i = keys.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(stream.below(i));
    std::swap(keys[i - 1], keys[j]);
  }
}

std::vector<std::uint64_t> generate(const KeySetSpec& spec, const TabulationParams& params) {
  params.validate();
  const unsigned key_bits = params.key_bits();
  const std::uint64_t max_key = universe_size_minus_one(key_bits);
  std::vector<std::uint64_t> keys;

  switch (spec.kind) {
    case KeySetKind::kRandom:
      return random_keys(spec.n, key_bits, spec.seed);

    case KeySetKind::kDenseInterval: {
      if (spec.n > 0 && (spec.start > max_key || spec.n - 1 > max_key - spec.start)) {
        throw ConfigError("keyset: dense interval exceeds the key universe");
      }
      keys.resize(spec.n);
      for (std::size_t i = 0; i < spec.n; ++i) keys[i] = spec.start + i;
      shuffle_keys(keys, spec.seed);
      return keys;
    }

    case KeySetKind::kArithmetic: {
      if (spec.stride == 0) throw ConfigError("keyset: stride must be positive");
      if (spec.n > 0) {
        const unsigned __int128 last =
            spec.start + static_cast<unsigned __int128>(spec.n - 1) * spec.stride;
        if (last > max_key) throw ConfigError("keyset: progression exceeds the key universe");
      }
      keys.resize(spec.n);
      for (std::size_t i = 0; i < spec.n; ++i) keys[i] = spec.start + i * spec.stride;
      return keys;
    }

    case KeySetKind::kHypercube: {
      const unsigned dim = spec.dim == 0 ? params.c : spec.dim;
      if (dim > params.c) throw ConfigError("keyset: hypercube dimension exceeds c");
      std::uint64_t side = spec.side;
      if (side == 0) {
        side = exact_root(spec.n, dim);
        if (side == 0) throw ConfigError("keyset: hypercube size is not a perfect power");
      }
      if (side > params.alphabet_size()) throw ConfigError("keyset: hypercube side exceeds alphabet");
      unsigned __int128 total = 1;
      for (unsigned i = 0; i < dim; ++i) total *= side;
      if (spec.n != 0 && total != spec.n) throw ConfigError("keyset: n must equal side^dim");
      keys.resize(static_cast<std::size_t>(total));
      for (std::size_t idx = 0; idx < keys.size(); ++idx) {
        std::uint64_t rest = idx;
        std::uint64_t key = 0;
        for (unsigned i = 0; i < dim; ++i) {
          key |= (rest % side) << (i * params.char_bits);
          rest /= side;
        }
        keys[idx] = key;
      }
      shuffle_keys(keys, spec.seed);
      return keys;
    }

    case KeySetKind::kCuckooHard: {
      if (params.c < 3) throw ConfigError("keyset: cuckoo-hard needs at least 3 characters");
      const std::uint64_t s = exact_root(spec.n, 3);
      if (s == 0) throw ConfigError("keyset: cuckoo-hard needs n to be a perfect cube");
      if (s > params.alphabet_size()) throw ConfigError("keyset: cube side exceeds alphabet");
      keys.reserve(spec.n);
      const unsigned b = params.char_bits;
      for (std::uint64_t z = 0; z < s; ++z) {
        for (std::uint64_t y = 0; y < s; ++y) {
          for (std::uint64_t x = 0; x < s; ++x) keys.push_back(x | (y << b) | (z << (2 * b)));
        }
      }
      shuffle_keys(keys, spec.seed);
      return keys;
    }
  }
  throw ConfigError("keyset: unknown kind");
}

KeySetSpec parse_keyset(std::string_view text, std::size_t default_n) {
  const auto colon = text.find(':');
  const std::string base(text.substr(0, colon));
  std::map<std::string, std::string> opts;
  if (colon != std::string_view::npos) {
    std::string_view rest = text.substr(colon + 1);
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      const std::string_view item = rest.substr(0, comma);
      const auto eq = item.find('=');
      if (eq == std::string_view::npos) {
        throw ConfigError("keyset: option '" + std::string(item) + "' is not key=value");
      }
      opts[std::string(item.substr(0, eq))] = std::string(item.substr(eq + 1));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
  }

  KeySetSpec spec;
  spec.n = default_n;
  if (base == "random") {
    spec.kind = KeySetKind::kRandom;
  } else if (base == "dense") {
    spec.kind = KeySetKind::kDenseInterval;
  } else if (base == "hypercube") {
    spec.kind = KeySetKind::kHypercube;
  } else if (base == "cuckoo-hard") {
    spec.kind = KeySetKind::kCuckooHard;
  } else if (base == "arith") {
    spec.kind = KeySetKind::kArithmetic;
  } else {
    throw ConfigError("unknown key set '" + base + "'");
  }

  for (const auto& [key, value] : opts) {
    const std::uint64_t v = parse_u64(value, key);
    if (key == "n") {
      spec.n = static_cast<std::size_t>(v);
    } else if (key == "seed") {
      spec.seed = v;
    } else if (key == "start" && (spec.kind == KeySetKind::kDenseInterval ||
                                  spec.kind == KeySetKind::kArithmetic)) {
      spec.start = v;
    } else if (key == "stride" && spec.kind == KeySetKind::kArithmetic) {
      spec.stride = v;
    } else if (key == "A" && spec.kind == KeySetKind::kHypercube) {
      spec.side = v;
    } else if (key == "c" && spec.kind == KeySetKind::kHypercube) {
      spec.dim = static_cast<unsigned>(v);
    } else {
      throw ConfigError("key set '" + base + "' has no option '" + key + "'");
    }
  }
  return spec;
}

std::string to_string(const KeySetSpec& spec) {
  std::string out;
  switch (spec.kind) {
    case KeySetKind::kRandom:
      out = "random:";
      break;
    case KeySetKind::kDenseInterval:
      out = "dense:start=" + std::to_string(spec.start) + ",";
      break;
    case KeySetKind::kHypercube:
      out = "hypercube:A=" + std::to_string(spec.side) + ",c=" + std::to_string(spec.dim) + ",";
      break;
    case KeySetKind::kCuckooHard:
      out = "cuckoo-hard:";
      break;
    case KeySetKind::kArithmetic:
      out = "arith:start=" + std::to_string(spec.start) + ",stride=" + std::to_string(spec.stride) +
            ",";
      break;
  }
  return out + "n=" + std::to_string(spec.n) + ",seed=" + std::to_string(spec.seed);
}

std::uint64_t first_key_outside(const std::vector<std::uint64_t>& keys, unsigned key_bits,
                                std::uint64_t from) {
  const absl::flat_hash_set<std::uint64_t> set(keys.begin(), keys.end());
  const std::uint64_t max_key = low_mask(key_bits);
  for (std::uint64_t k = from; k <= max_key; ++k) {
    if (!set.contains(k)) return k;
    if (k == max_key) break;
  }
  throw ConfigError("keyset: no key left outside the set");
}

}  // namespace tabhash
