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

#include "tabhash/linear_probing.hpp"

#include <cstdio>
#include <ostream>
#include <string>

#include "tabhash/bits.hpp"
#include "tabhash/errors.hpp"

namespace tabhash {

LinearProbingTable::LinearProbingTable(std::size_t capacity, SchemeHandle scheme)
    : scheme_(std::move(scheme)) {
  if (capacity < 2 || !is_power_of_two(capacity)) {
    throw ConfigError("linear probing: capacity must be a power of two >= 2");
  }
  lg_capacity_ = log2_exact(capacity);
  if (lg_capacity_ > scheme_.out_bits()) {
    throw ConfigError("linear probing: hash has fewer than lg(capacity) bits");
  }
  mask_ = capacity - 1;
  keys_.assign(capacity, 0);
  homes_.assign(capacity, 0);
  used_.assign(capacity, 0);
}

std::size_t LinearProbingTable::home(std::uint64_t key) const {
  return static_cast<std::size_t>(top_bits(scheme_(key), scheme_.out_bits(), lg_capacity_));
}

std::size_t LinearProbingTable::record(std::size_t probes) {
  total_probes_ += probes;
  ++operations_;
  last_probes_ = probes;
  return probes;
}

void LinearProbingTable::reset_counters() {
  total_probes_ = 0;
  operations_ = 0;
  last_probes_ = 0;
}

std::size_t LinearProbingTable::insert(std::uint64_t key) {
  const std::size_t h = home(key);
  std::size_t i = h;
  std::size_t probes = 1;
  while (used_[i]) {
    if (keys_[i] == key) throw DuplicateKeyError("linear probing: key already present");
    i = (i + 1) & mask_;
    ++probes;
  }
  if (size_ + 1 >= capacity()) {
    throw CapacityError("linear probing: table would have no free slot left");
  }
  used_[i] = 1;
  keys_[i] = key;
  homes_[i] = h;
  ++size_;
  return record(probes);
}

SearchResult LinearProbingTable::search(std::uint64_t key) const {
  std::size_t i = home(key);
  std::size_t probes = 1;
  while (used_[i]) {
    if (keys_[i] == key) return {true, probes};
    i = (i + 1) & mask_;
    ++probes;
  }
  return {false, probes};
}

std::size_t LinearProbingTable::erase(std::uint64_t key) {
  std::size_t i = home(key);
  std::size_t probes = 1;
  std::size_t hole = capacity();
  while (used_[i]) {
    if (keys_[i] == key) hole = i;
    i = (i + 1) & mask_;
    ++probes;
  }
  if (hole == capacity()) throw NotFoundError("linear probing: key not present");

  used_[hole] = 0;
  --size_;
  // Pull later keys of the run back into the hole whenever the hole lies
  // between their home and their current slot.
  for (std::size_t j = (hole + 1) & mask_; used_[j]; j = (j + 1) & mask_) {
    const std::size_t displacement = (j - homes_[j]) & mask_;
    const std::size_t gap = (j - hole) & mask_;
    if (displacement >= gap) {
      keys_[hole] = keys_[j];
      homes_[hole] = homes_[j];
      used_[hole] = 1;
      used_[j] = 0;
      hole = j;
    }
  }
  return record(probes);
}

std::size_t LinearProbingTable::run_length_at(std::size_t slot) const {
  std::size_t r = 0;
  for (std::size_t i = slot & mask_; used_[i]; i = (i + 1) & mask_) ++r;
  return r;
}

std::size_t LinearProbingTable::run_length(std::uint64_t key) const {
  return run_length_at(home(key));
}

std::optional<std::uint64_t> LinearProbingTable::slot(std::size_t i) const {
  if (i >= capacity() || !used_[i]) return std::nullopt;
  return keys_[i];
}

bool LinearProbingTable::audit() const {
  std::size_t occupied = 0;
  for (std::size_t s = 0; s < capacity(); ++s) {
    if (!used_[s]) continue;
    ++occupied;
    const std::size_t h = home(keys_[s]);
    if (h != homes_[s]) return false;
    for (std::size_t i = h; i != s; i = (i + 1) & mask_) {
      if (!used_[i]) return false;
    }
  }
  return occupied == size_ && size_ < capacity();
}

void LinearProbingTable::dump(std::ostream& out) const {
  char buf[64];
  for (std::size_t s = 0; s < capacity(); ++s) {
    if (!used_[s]) continue;
    std::snprintf(buf, sizeof buf, "%zu,%llx,%llu\n", s,
                  static_cast<unsigned long long>(keys_[s]),
                  static_cast<unsigned long long>(homes_[s]));
    out << buf;
  }
}

}  // namespace tabhash
