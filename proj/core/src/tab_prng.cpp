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

#include "tabhash/tab_prng.hpp"

#include <array>
#include <fstream>
#include <istream>
#include <ostream>

#include "tabhash/bits.hpp"
#include "tabhash/errors.hpp"
#include "tabhash/random_stream.hpp"

namespace tabhash {
namespace {

constexpr std::array<char, 4> kMagic = {'T', 'P', 'R', 'G'};
constexpr std::uint32_t kVersion = 1;

void put_le(std::ostream& out, std::uint64_t v, unsigned bytes) {
  for (unsigned i = 0; i < bytes; ++i) out.put(static_cast<char>((v >> (8 * i)) & 0xff));
}

std::uint64_t get_le(std::istream& in, unsigned bytes) {
  std::uint64_t v = 0;
  for (unsigned i = 0; i < bytes; ++i) {
    const int ch = in.get();
    if (ch == std::char_traits<char>::eof()) throw Error("prng golden file: truncated");
    v |= static_cast<std::uint64_t>(static_cast<unsigned char>(ch)) << (8 * i);
  }
  return v;
}

}  // namespace

TabPrng TabPrng::create(std::uint64_t seed, std::size_t row_length, unsigned degree,
                        unsigned out_bits) {
  if (!is_power_of_two(row_length)) throw ConfigError("prng: row length must be a power of two");
  if (out_bits < 1 || out_bits > kExponent) throw ConfigError("prng: out_bits must lie in 1..61");
  if (degree < 1) throw ConfigError("prng: degree must be at least 1");
  StrongStream stream(seed);
  std::vector<std::uint64_t> table(row_length);
  for (auto& w : table) w = stream.bits(out_bits);
  MersennePolyParams params;
  params.exponent = kExponent;
  params.out_bits = out_bits;
  params.coeffs.resize(std::size_t{degree} + 1);
  for (auto& a : params.coeffs) a = stream.below(params.prime());
  return TabPrng(std::move(table), MersennePoly(std::move(params)));
}

TabPrng::TabPrng(std::vector<std::uint64_t> row_table, MersennePoly row_poly)
    : row_table_(std::move(row_table)), row_poly_(std::move(row_poly)) {
  if (!is_power_of_two(row_table_.size())) {
    throw ConfigError("prng: row length must be a power of two");
  }
  const std::uint64_t mask = low_mask(out_bits());
  for (std::uint64_t w : row_table_) {
    if ((w & ~mask) != 0) throw ConfigError("prng: row table entry wider than out_bits");
  }
  row_value_ = row_poly_(0);
}

std::uint64_t TabPrng::next() {
  const std::uint64_t out = row_value_ ^ row_table_[col_index_];
  if (++col_index_ == row_table_.size()) {
    col_index_ = 0;
    row_value_ = row_poly_(++row_index_);
  }
  return out;
}

PrngGolden make_prng_golden(std::uint64_t seed, std::uint32_t row_length, std::uint32_t degree,
                            std::uint32_t out_bits, std::uint32_t count) {
  TabPrng prng = TabPrng::create(seed, row_length, degree, out_bits);
  PrngGolden g{seed, row_length, degree, out_bits, {}};
  g.words.resize(count);
  for (auto& w : g.words) w = prng.next();
  return g;
}

void write_prng_golden(std::ostream& out, const PrngGolden& g) {
  out.write(kMagic.data(), kMagic.size());
  put_le(out, kVersion, 4);
  put_le(out, g.seed, 8);
  put_le(out, g.row_length, 4);
  put_le(out, g.degree, 4);
  put_le(out, g.out_bits, 4);
  put_le(out, g.words.size(), 4);
  for (std::uint64_t w : g.words) put_le(out, w, 8);
  if (!out) throw Error("prng golden file: write failed");
}

PrngGolden read_prng_golden(std::istream& in) {
  std::array<char, 4> magic{};
  in.read(magic.data(), magic.size());
  if (!in || magic != kMagic) throw Error("prng golden file: bad magic");
  if (get_le(in, 4) != kVersion) throw Error("prng golden file: unsupported version");
  PrngGolden g;
  g.seed = get_le(in, 8);
  g.row_length = static_cast<std::uint32_t>(get_le(in, 4));
  g.degree = static_cast<std::uint32_t>(get_le(in, 4));
  g.out_bits = static_cast<std::uint32_t>(get_le(in, 4));
  g.words.resize(get_le(in, 4));
  for (auto& w : g.words) w = get_le(in, 8);
  return g;
}

void save_prng_golden(const std::filesystem::path& path, const PrngGolden& golden) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  write_prng_golden(out, golden);
}

PrngGolden load_prng_golden(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  return read_prng_golden(in);
}

}  // namespace tabhash
