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

#include "tabhash/scheme.hpp"

#include <charconv>
#include <map>
#include <string>

#include "tabhash/errors.hpp"

namespace tabhash {
namespace {

unsigned parse_unsigned(std::string_view text, std::string_view what) {
  unsigned value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end || text.empty()) {
    throw ConfigError("scheme: bad value '" + std::string(text) + "' for " + std::string(what));
  }
  return value;
}

std::map<std::string, unsigned, std::less<>> parse_options(std::string_view text) {
  std::map<std::string, unsigned, std::less<>> opts;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const std::string_view item = text.substr(0, comma);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("scheme: option '" + std::string(item) + "' is not key=value");
    }
    const std::string key(item.substr(0, eq));
    opts[key] = parse_unsigned(item.substr(eq + 1), key);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return opts;
}

}  // namespace

unsigned SchemeHandle::out_bits() const {
  struct {
    unsigned operator()(const TabulationScheme& s) const { return s.params().out_bits; }
    unsigned operator()(const MultShift& s) const { return s.params().out_bits; }
    unsigned operator()(const MersennePoly& s) const { return s.params().out_bits; }
    unsigned operator()(const TrulyRandomOracle& s) const { return s.out_bits(); }
  } visitor;
  return std::visit(visitor, impl_);
}

unsigned SchemeHandle::key_bits() const {
  struct {
    unsigned operator()(const TabulationScheme& s) const { return s.params().key_bits(); }
    unsigned operator()(const MultShift& s) const { return s.params().key_bits; }
    unsigned operator()(const MersennePoly&) const { return 64; }
    unsigned operator()(const TrulyRandomOracle&) const { return 64; }
  } visitor;
  return std::visit(visitor, impl_);
}

void SchemeConfig::validate() const {
  switch (kind) {
    case SchemeKind::kTabulation: {
      TabulationParams p = tab;
      p.out_bits = out_bits;
      p.validate();
      break;
    }
    case SchemeKind::kUnivMultShift:
    case SchemeKind::kTwoIndepMultShift: {
      MultShiftParams p;
      p.key_bits = key_bits;
      p.out_bits = out_bits;
      p.validate();
      break;
    }
    case SchemeKind::kMersennePoly: {
      const MersenneField field(exponent);
      if (k < 1) throw ConfigError("scheme: polynomial needs k >= 1");
      if (out_bits < 1 || out_bits > 64) throw ConfigError("scheme: out_bits must lie in 1..64");
      break;
    }
    case SchemeKind::kTrulyRandom:
      if (out_bits < 1 || out_bits > 64) throw ConfigError("scheme: out_bits must lie in 1..64");
      if (key_bits < 1 || key_bits > 64) throw ConfigError("scheme: key bits must lie in 1..64");
      break;
  }
}

SchemeConfig parse_scheme(std::string_view text) {
  const auto colon = text.find(':');
  const std::string_view base = text.substr(0, colon);
  auto opts = parse_options(colon == std::string_view::npos ? std::string_view{}
                                                            : text.substr(colon + 1));
  SchemeConfig cfg;
  std::map<std::string, unsigned*, std::less<>> allowed{{"out", &cfg.out_bits}};

  if (base == "tab" || base.starts_with("tab-c")) {
    cfg.kind = SchemeKind::kTabulation;
    if (base != "tab") {
      cfg.tab.c = parse_unsigned(base.substr(5), "c");
      if (cfg.tab.c == 0 || 32 % cfg.tab.c != 0) {
        throw ConfigError("scheme: tab-c<c> needs c dividing 32; use tab:c=..,char=.. instead");
      }
      cfg.tab.char_bits = 32 / cfg.tab.c;
    }
    allowed["c"] = &cfg.tab.c;
    allowed["char"] = &cfg.tab.char_bits;
  } else if (base == "univ32" || base == "univ64") {
    cfg.kind = SchemeKind::kUnivMultShift;
    cfg.key_bits = base == "univ32" ? 32 : 64;
  } else if (base == "twoindep32" || base == "twoindep64") {
    cfg.kind = SchemeKind::kTwoIndepMultShift;
    cfg.key_bits = base == "twoindep32" ? 32 : 64;
  } else if (base.starts_with("poly")) {
    cfg.kind = SchemeKind::kMersennePoly;
    if (base.size() > 4) cfg.k = parse_unsigned(base.substr(4), "k");
    allowed["k"] = &cfg.k;
    allowed["p"] = &cfg.exponent;
  } else if (base == "random") {
    cfg.kind = SchemeKind::kTrulyRandom;
    allowed["key"] = &cfg.key_bits;
  } else {
    throw ConfigError("unknown scheme '" + std::string(base) + "'");
  }

  for (const auto& [key, value] : opts) {
    auto it = allowed.find(key);
    if (it == allowed.end()) {
      throw ConfigError("scheme '" + std::string(base) + "' has no option '" + key + "'");
    }
    *it->second = value;
  }
  cfg.tab.out_bits = cfg.out_bits;
  cfg.validate();
  return cfg;
}

std::string to_string(const SchemeConfig& cfg) {
  const std::string out = "out=" + std::to_string(cfg.out_bits);
  switch (cfg.kind) {
    case SchemeKind::kTabulation:
      return "tab:c=" + std::to_string(cfg.tab.c) + ",char=" + std::to_string(cfg.tab.char_bits) +
             "," + out;
    case SchemeKind::kUnivMultShift:
      return "univ" + std::to_string(cfg.key_bits) + ":" + out;
    case SchemeKind::kTwoIndepMultShift:
      return "twoindep" + std::to_string(cfg.key_bits) + ":" + out;
    case SchemeKind::kMersennePoly:
      return "poly:k=" + std::to_string(cfg.k) + ",p=" + std::to_string(cfg.exponent) + "," + out;
    case SchemeKind::kTrulyRandom:
      return "random:key=" + std::to_string(cfg.key_bits) + "," + out;
  }
  return {};
}

SchemeHandle make_scheme(const SchemeConfig& cfg, std::uint64_t seed) {
  switch (cfg.kind) {
    case SchemeKind::kTabulation: {
      TabulationParams p = cfg.tab;
      p.out_bits = cfg.out_bits;
      return TabulationScheme::from_seed(p, seed);
    }
    case SchemeKind::kUnivMultShift:
      return MultShift::from_seed(MultShiftVariant::kUniversal, cfg.key_bits, cfg.out_bits, seed);
    case SchemeKind::kTwoIndepMultShift:
      return MultShift::from_seed(MultShiftVariant::kTwoIndependent, cfg.key_bits, cfg.out_bits,
                                  seed);
    case SchemeKind::kMersennePoly:
      return MersennePoly::from_seed(cfg.k, cfg.exponent, cfg.out_bits, seed);
    case SchemeKind::kTrulyRandom:
      return TrulyRandomOracle(seed, cfg.out_bits);
  }
  throw ConfigError("unknown scheme kind");
}

unsigned key_bits_of(const SchemeConfig& cfg) {
  switch (cfg.kind) {
    case SchemeKind::kTabulation:
      return cfg.tab.key_bits();
    case SchemeKind::kMersennePoly:
      return cfg.exponent >= 32 ? 32 : cfg.exponent - 1;
    default:
      return cfg.key_bits;
  }
}

}  // namespace tabhash
