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

#ifndef TABHASH_TABLE_FILE_HPP_
#define TABHASH_TABLE_FILE_HPP_

#include <filesystem>
#include <iosfwd>

#include "tabhash/tabulation.hpp"

namespace tabhash {

// Binary table dump. Layout (all little-endian):
//   bytes 0..3    magic "TABH"
//   bytes 4..7    u32 version (1)
//   bytes 8..9    u16 c
//   bytes 10..11  u16 char_bits
//   bytes 12..13  u16 out_bits
//   bytes 14..15  u16 reserved (0)
// followed by the c tables in order, Σ entries each, every entry stored in
// the smallest of 1/2/4/8 bytes that holds out_bits.
inline constexpr std::uint32_t kTableFileVersion = 1;

void write_tables(std::ostream& out, const TabulationScheme& scheme);
TabulationScheme read_tables(std::istream& in);

void save_tables(const std::filesystem::path& path, const TabulationScheme& scheme);
TabulationScheme load_tables(const std::filesystem::path& path);

}  // namespace tabhash

#endif  // TABHASH_TABLE_FILE_HPP_
