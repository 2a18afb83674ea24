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

#ifndef TABHASH_MERSENNE_POLY_HPP_
#define TABHASH_MERSENNE_POLY_HPP_

#include <cstdint>
#include <vector>

namespace tabhash {

// Arithmetic modulo the Mersenne prime p = 2^exponent - 1.
class MersenneField {
 public:
  // exponent must be one of the Mersenne prime exponents below 64
  // (2, 3, 5, 7, 13, 17, 19, 31, 61).
  explicit MersenneField(unsigned exponent = 61);

  unsigned exponent() const { return exponent_; }
  std::uint64_t prime() const { return prime_; }

  // x mod p via repeated (x & p) + (x >> exponent) and a final subtract.
  std::uint64_t reduce(unsigned __int128 x) const;
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const;

 private:
  unsigned exponent_;
  std::uint64_t prime_;
};

struct MersennePolyParams {
  unsigned exponent = 61;
  // a_0 .. a_{k-1}; k = coeffs.size() is the independence.
  std::vector<std::uint64_t> coeffs;
  unsigned out_bits = 32;

  std::uint64_t prime() const { return (std::uint64_t{1} << exponent) - 1; }
  void validate() const;
};

// k-independent polynomial hashing: ((sum a_i x^i) mod p) mod 2^out_bits.
class MersennePoly {
 public:
  explicit MersennePoly(MersennePolyParams params);

  static MersennePoly from_seed(unsigned k, unsigned exponent,
                                unsigned out_bits, std::uint64_t seed);

  // Keys are reduced mod p before evaluation.
  std::uint64_t operator()(std::uint64_t key) const {
    return eval_mod_p(key) & out_mask_;
  }

  // The polynomial value in [p], before truncation to out_bits.
  std::uint64_t eval_mod_p(std::uint64_t key) const;

  const MersennePolyParams& params() const { return params_; }
  const MersenneField& field() const { return field_; }

 private:
  MersennePolyParams params_;
  MersenneField field_;
  std::uint64_t out_mask_;
};

}  // namespace tabhash

#endif  // TABHASH_MERSENNE_POLY_HPP_
