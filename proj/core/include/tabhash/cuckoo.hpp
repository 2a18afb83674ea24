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

#ifndef TABHASH_CUCKOO_HPP_
#define TABHASH_CUCKOO_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "tabhash/scheme.hpp"

namespace tabhash {

// Where each key of a successful static build lives: table `side[i]`,
// position `slot[i]`.
struct CuckooPlacement {
  std::vector<std::uint8_t> side;
  std::vector<std::uint64_t> slot;
};

// A connected component of the cuckoo graph with more keys (edges) than
// positions (nodes). `keys` holds key values for the keyed builder and key
// indices for the edge-list builder.
struct CuckooObstruction {
  std::vector<std::uint64_t> keys;
  std::size_t positions = 0;
};

using CuckooBuildResult = std::variant<CuckooPlacement, CuckooObstruction>;

inline bool succeeded(const CuckooBuildResult& r) {
  return std::holds_alternative<CuckooPlacement>(r);
}

// Static cuckoo placement of keys given their two candidate positions,
// slot0[i] in table 0 and slot1[i] in table 1 (both < m). Succeeds iff every
// connected component of the bipartite multigraph has no more edges than
// nodes; the first offending component (by lowest table-0 node, then
// table-1 node) is returned otherwise.
CuckooBuildResult cuckoo_orient(std::span<const std::uint64_t> slot0,
                                std::span<const std::uint64_t> slot1, std::size_t m);

// Same, with positions taken as the top lg m bits of h0 and h1.
// m must be a power of two. Obstructions carry key values.
CuckooBuildResult cuckoo_build_static(std::span<const std::uint64_t> keys, const SchemeHandle& h0,
                                      const SchemeHandle& h1, std::size_t m);

// True when the placement puts each key at one of its two positions and no
// position holds two keys.
bool audit_placement(const CuckooPlacement& placement, std::span<const std::uint64_t> slot0,
                     std::span<const std::uint64_t> slot1, std::size_t m);

enum class CuckooStatus { kPlaced, kNeedsRehash };

struct CuckooInsertResult {
  CuckooStatus status = CuckooStatus::kPlaced;
  std::size_t evictions = 0;
};

// Dynamic two-table cuckoo hashing with an eviction walk.
class CuckooTable {
 public:
  using SchemeFactory = std::function<SchemeHandle(std::uint64_t seed)>;

  // Default eviction cutoff for a table of capacity m: 6 * ceil(lg m) + 32.
  static std::size_t default_max_evictions(std::size_t m);

  // `factory` builds h0 and h1 from seeds derived from `seed`; rehashing
  // asks it for fresh ones.
  CuckooTable(std::size_t capacity, SchemeFactory factory, std::uint64_t seed,
              std::optional<std::size_t> max_evictions = std::nullopt);

  // Alternating eviction walk starting in table 0. On kNeedsRehash the
  // table is left exactly as it was and the key is not stored.
  // Throws DuplicateKeyError.
  CuckooInsertResult insert(std::uint64_t key);

  // insert(), rehashing with fresh functions until the key fits. Throws
  // CapacityError after `max_rehashes` consecutive failures.
  CuckooInsertResult insert_or_rehash(std::uint64_t key, std::size_t max_rehashes = 64);

  // Draws fresh h0, h1 and re-places every key; returns false (table
  // unchanged) if that placement fails.
  bool rehash();

  bool contains(std::uint64_t key) const;
  bool erase(std::uint64_t key);

  std::size_t size() const { return size_; }
  std::size_t capacity() const { return m_; }
  std::size_t rehash_count() const { return rehash_count_; }
  std::size_t max_evictions() const { return max_evictions_; }
  std::size_t position(int side, std::uint64_t key) const;
  std::optional<std::uint64_t> slot(int side, std::size_t i) const;

  bool audit() const;

 private:
  struct Slot {
    bool used = false;
    std::uint64_t key = 0;
  };

  void draw_functions();

  std::size_t m_;
  unsigned lg_m_;
  SchemeFactory factory_;
  std::uint64_t seed_;
  std::uint64_t generation_ = 0;
  std::size_t max_evictions_;
  std::optional<SchemeHandle> h_[2];
  std::vector<Slot> slots_[2];
  std::size_t size_ = 0;
  std::size_t rehash_count_ = 0;
};

}  // namespace tabhash

#endif  // TABHASH_CUCKOO_HPP_
