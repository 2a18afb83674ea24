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

#include "tabhash/table_file.hpp"

#include <array>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <vector>

#include "tabhash/errors.hpp"

namespace tabhash {
namespace {

constexpr std::array<char, 4> kMagic = {'T', 'A', 'B', 'H'};

unsigned entry_bytes(unsigned out_bits) {
  if (out_bits <= 8) return 1;
  if (out_bits <= 16) return 2;
  if (out_bits <= 32) return 4;
  return 8;
}

void put_le(std::ostream& out, std::uint64_t v, unsigned bytes) {
  for (unsigned i = 0; i < bytes; ++i) out.put(static_cast<char>((v >> (8 * i)) & 0xff));
}

std::uint64_t get_le(std::istream& in, unsigned bytes) {
  std::uint64_t v = 0;
  for (unsigned i = 0; i < bytes; ++i) {
    const int ch = in.get();
    if (ch == std::char_traits<char>::eof()) throw Error("table file: truncated");
    v |= static_cast<std::uint64_t>(static_cast<unsigned char>(ch)) << (8 * i);
  }
  return v;
}

}  // namespace

void write_tables(std::ostream& out, const TabulationScheme& scheme) {
  const TabulationParams& p = scheme.params();
  out.write(kMagic.data(), kMagic.size());
  put_le(out, kTableFileVersion, 4);
  put_le(out, p.c, 2);
  put_le(out, p.char_bits, 2);
  put_le(out, p.out_bits, 2);
  put_le(out, 0, 2);
  const unsigned width = entry_bytes(p.out_bits);
  for (std::uint64_t e : scheme.entries()) put_le(out, e, width);
  if (!out) throw Error("table file: write failed");
}

TabulationScheme read_tables(std::istream& in) {
  std::array<char, 4> magic{};
  in.read(magic.data(), magic.size());
  if (!in || magic != kMagic) throw Error("table file: bad magic");
  const auto version = get_le(in, 4);
  if (version != kTableFileVersion) throw Error("table file: unsupported version");
  TabulationParams p;
  p.c = static_cast<unsigned>(get_le(in, 2));
  p.char_bits = static_cast<unsigned>(get_le(in, 2));
  p.out_bits = static_cast<unsigned>(get_le(in, 2));
  get_le(in, 2);
  p.validate();
  const unsigned width = entry_bytes(p.out_bits);
  std::vector<std::uint64_t> entries(p.c * p.alphabet_size());
  for (auto& e : entries) e = get_le(in, width);
  return TabulationScheme::from_tables(p, std::move(entries));
}

void save_tables(const std::filesystem::path& path, const TabulationScheme& scheme) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  write_tables(out, scheme);
}

TabulationScheme load_tables(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  return read_tables(in);
}

}  // namespace tabhash
