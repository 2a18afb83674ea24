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

#ifndef TABHASH_SCHEME_HPP_
#define TABHASH_SCHEME_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include "tabhash/mersenne_poly.hpp"
#include "tabhash/mult_shift.hpp"
#include "tabhash/tabulation.hpp"
#include "tabhash/truly_random.hpp"

namespace tabhash {

// Any hash family of the library behind a single evaluation contract.
class SchemeHandle {
 public:
  using Impl = std::variant<TabulationScheme, MultShift, MersennePoly,
                            TrulyRandomOracle>;

  SchemeHandle(TabulationScheme s) : impl_(std::move(s)) {}  // NOLINT
  SchemeHandle(MultShift s) : impl_(std::move(s)) {}         // NOLINT
  SchemeHandle(MersennePoly s) : impl_(std::move(s)) {}      // NOLINT
  SchemeHandle(TrulyRandomOracle s) : impl_(std::move(s)) {} // NOLINT

  std::uint64_t operator()(std::uint64_t key) const {
    // Tabulation dominates the experiments; skip std::visit for it.
    if (const auto* tab = std::get_if<TabulationScheme>(&impl_)) return (*tab)(key);
    return std::visit([key](const auto& s) { return s(key); }, impl_);
  }

  unsigned out_bits() const;

  // Key width accepted by the scheme (64 for the oracle and the polynomial).
  unsigned key_bits() const;

  const Impl& impl() const { return impl_; }

  template <typename T>
  const T* get_if() const { return std::get_if<T>(&impl_); }

 private:
  Impl impl_;
};

enum class SchemeKind {
  kTabulation,
  kUnivMultShift,
  kTwoIndepMultShift,
  kMersennePoly,
  kTrulyRandom,
};

// A hash family plus its shape, minus the randomness. make_scheme() turns a
// config and a seed into a concrete function; experiments draw a fresh seed
// per trial.
//
// Textual form (parse_scheme / to_string):
//   tab-c<c>                 c characters over 32-bit keys
//   tab:c=2,char=8,out=32    explicit tabulation shape
//   univ32, univ64           universal multiply-shift
//   twoindep32, twoindep64   2-independent multiply-shift
//   poly5                    5-independent polynomial mod 2^61-1
//   poly:k=3,p=5,out=5       polynomial with k coeffs mod 2^p-1
//   random                   truly random oracle
// Any form accepts trailing options, e.g. "univ32:out=21", "random:out=64".
struct SchemeConfig {
  SchemeKind kind = SchemeKind::kTabulation;
  TabulationParams tab{};
  unsigned key_bits = 32;
  unsigned out_bits = 32;
  unsigned k = 5;
  unsigned exponent = 61;

  void validate() const;
};

SchemeConfig parse_scheme(std::string_view text);
std::string to_string(const SchemeConfig& config);

SchemeHandle make_scheme(const SchemeConfig& config, std::uint64_t seed);

// Width of the keys the configured family hashes.
unsigned key_bits_of(const SchemeConfig& config);

}  // namespace tabhash

#endif  // TABHASH_SCHEME_HPP_
