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

#include "tabhash/cuckoo.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>

#include "tabhash/bits.hpp"
#include "tabhash/errors.hpp"
#include "tabhash/random_stream.hpp"

namespace tabhash {
namespace {

using Index = std::uint32_t;

// Bipartite multigraph in CSR form: nodes 0..m-1 are table-0 positions,
// m..2m-1 table-1 positions; edge i joins the two positions of key i.
struct CuckooGraph {
  std::size_t m = 0;
  std::vector<Index> tail;  // table-0 node of edge i
  std::vector<Index> head;  // table-1 node of edge i
  std::vector<Index> offset;
  std::vector<Index> incident;

  Index other(Index edge, Index node) const { return tail[edge] == node ? head[edge] : tail[edge]; }
};

CuckooGraph build_graph(std::span<const std::uint64_t> slot0, std::span<const std::uint64_t> slot1,
                        std::size_t m) {
  CuckooGraph g;
  g.m = m;
  const std::size_t n = slot0.size();
  const std::size_t nodes = 2 * m;
  g.tail.resize(n);
  g.head.resize(n);
  g.offset.assign(nodes + 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (slot0[i] >= m || slot1[i] >= m) throw PreconditionError("cuckoo: position out of range");
    g.tail[i] = static_cast<Index>(slot0[i]);
    g.head[i] = static_cast<Index>(m + slot1[i]);
    ++g.offset[g.tail[i] + 1];
    ++g.offset[g.head[i] + 1];
  }
  for (std::size_t v = 0; v < nodes; ++v) g.offset[v + 1] += g.offset[v];
  g.incident.resize(2 * n);
  std::vector<Index> fill(g.offset.begin(), g.offset.end() - 1);
  for (std::size_t i = 0; i < n; ++i) {
    g.incident[fill[g.tail[i]]++] = static_cast<Index>(i);
    g.incident[fill[g.head[i]]++] = static_cast<Index>(i);
  }
  return g;
}

// Depth-first sweep over components in node order; returns the first
// component with more edges than nodes.
std::optional<CuckooObstruction> find_obstruction(const CuckooGraph& g) {
  const std::size_t nodes = 2 * g.m;
  std::vector<std::uint8_t> seen(nodes, 0);
  std::vector<Index> stack;
  std::vector<Index> members;
  for (std::size_t start = 0; start < nodes; ++start) {
    if (seen[start] || g.offset[start] == g.offset[start + 1]) continue;
    members.clear();
    stack.push_back(static_cast<Index>(start));
    seen[start] = 1;
    std::size_t degree_sum = 0;
    while (!stack.empty()) {
      const Index v = stack.back();
      stack.pop_back();
      members.push_back(v);
      degree_sum += g.offset[v + 1] - g.offset[v];
      for (Index k = g.offset[v]; k < g.offset[v + 1]; ++k) {
        const Index u = g.other(g.incident[k], v);
        if (!seen[u]) {
          seen[u] = 1;
          stack.push_back(u);
        }
      }
    }
    const std::size_t edges = degree_sum / 2;
    if (edges > members.size()) {
      CuckooObstruction obstruction;
      obstruction.positions = members.size();
      for (Index v : members) {
        if (v >= g.m) continue;  // each edge has exactly one table-0 end
        for (Index k = g.offset[v]; k < g.offset[v + 1]; ++k) {
          obstruction.keys.push_back(g.incident[k]);
        }
      }
      std::sort(obstruction.keys.begin(), obstruction.keys.end());
      return obstruction;
    }
  }
  return std::nullopt;
}

// Orients every edge towards a distinct node: leaves are peeled first, and
// what remains is a disjoint union of cycles, each walked once around.
CuckooPlacement orient(const CuckooGraph& g) {
  const std::size_t n = g.tail.size();
  const std::size_t nodes = 2 * g.m;
  constexpr Index kUnassigned = std::numeric_limits<Index>::max();
  std::vector<Index> owner(n, kUnassigned);
  std::vector<Index> degree(nodes);
  for (std::size_t v = 0; v < nodes; ++v) degree[v] = g.offset[v + 1] - g.offset[v];

  auto open_edge = [&](Index v) {
    for (Index k = g.offset[v]; k < g.offset[v + 1]; ++k) {
      if (owner[g.incident[k]] == kUnassigned) return g.incident[k];
    }
    return kUnassigned;
  };
  auto assign = [&](Index edge, Index node) {
    owner[edge] = node;
    --degree[g.tail[edge]];
    --degree[g.head[edge]];
  };

  std::vector<Index> leaves;
  for (std::size_t v = 0; v < nodes; ++v) {
    if (degree[v] == 1) leaves.push_back(static_cast<Index>(v));
  }
  while (!leaves.empty()) {
    const Index v = leaves.back();
    leaves.pop_back();
    if (degree[v] != 1) continue;
    const Index e = open_edge(v);
    const Index u = g.other(e, v);
    assign(e, v);
    if (degree[u] == 1) leaves.push_back(u);
  }

  for (std::size_t start = 0; start < nodes; ++start) {
    if (degree[start] == 0) continue;
    Index cur = static_cast<Index>(start);
    Index e = open_edge(cur);
    for (;;) {
      const Index next = g.other(e, cur);
      assign(e, next);
      cur = next;
      if (cur == start) break;
      e = open_edge(cur);
    }
  }

  CuckooPlacement placement;
  placement.side.resize(n);
  placement.slot.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const bool right = owner[i] >= g.m;
    placement.side[i] = right ? 1 : 0;
    placement.slot[i] = right ? owner[i] - g.m : owner[i];
  }
  return placement;
}

}  // namespace

CuckooBuildResult cuckoo_orient(std::span<const std::uint64_t> slot0,
                                std::span<const std::uint64_t> slot1, std::size_t m) {
  if (slot0.size() != slot1.size()) throw PreconditionError("cuckoo: position lists differ in length");
  if (m == 0 || 2 * m > std::numeric_limits<Index>::max() ||
      slot0.size() > std::numeric_limits<Index>::max() / 2) {
    throw ConfigError("cuckoo: table size out of range");
  }
  const CuckooGraph g = build_graph(slot0, slot1, m);
  if (auto obstruction = find_obstruction(g)) return *std::move(obstruction);
  return orient(g);
}

CuckooBuildResult cuckoo_build_static(std::span<const std::uint64_t> keys, const SchemeHandle& h0,
                                      const SchemeHandle& h1, std::size_t m) {
  if (!is_power_of_two(m)) throw ConfigError("cuckoo: m must be a power of two");
  const unsigned lg_m = log2_exact(m);
  if (lg_m > h0.out_bits() || lg_m > h1.out_bits()) {
    throw ConfigError("cuckoo: hash has fewer than lg m bits");
  }
  std::vector<std::uint64_t> slot0(keys.size());
  std::vector<std::uint64_t> slot1(keys.size());
  for (std::size_t i = 0; i < keys.size(); ++i) {
    slot0[i] = top_bits(h0(keys[i]), h0.out_bits(), lg_m);
    slot1[i] = top_bits(h1(keys[i]), h1.out_bits(), lg_m);
  }
  CuckooBuildResult result = cuckoo_orient(slot0, slot1, m);
  if (auto* obstruction = std::get_if<CuckooObstruction>(&result)) {
    for (auto& k : obstruction->keys) k = keys[k];
  }
  return result;
}

bool audit_placement(const CuckooPlacement& placement, std::span<const std::uint64_t> slot0,
                     std::span<const std::uint64_t> slot1, std::size_t m) {
  const std::size_t n = slot0.size();
  if (placement.side.size() != n || placement.slot.size() != n || slot1.size() != n) return false;
  std::vector<std::uint8_t> taken(2 * m, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const int side = placement.side[i];
    const std::uint64_t pos = placement.slot[i];
    if (side > 1 || pos >= m) return false;
    if (pos != (side == 0 ? slot0[i] : slot1[i])) return false;
    auto& cell = taken[side * m + pos];
    if (cell) return false;
    cell = 1;
  }
  return true;
}

std::size_t CuckooTable::default_max_evictions(std::size_t m) {
  const unsigned lg = m <= 1 ? 0 : static_cast<unsigned>(std::bit_width(m - 1));
  return 6 * lg + 32;
}

CuckooTable::CuckooTable(std::size_t capacity, SchemeFactory factory, std::uint64_t seed,
                         std::optional<std::size_t> max_evictions)
    : m_(capacity),
      factory_(std::move(factory)),
      seed_(seed),
      max_evictions_(max_evictions.value_or(default_max_evictions(capacity))) {
  if (!is_power_of_two(capacity)) throw ConfigError("cuckoo: capacity must be a power of two");
  lg_m_ = log2_exact(capacity);
  slots_[0].assign(m_, Slot{});
  slots_[1].assign(m_, Slot{});
  draw_functions();
}

void CuckooTable::draw_functions() {
  for (int side = 0; side < 2; ++side) {
    h_[side].emplace(factory_(derive_seed(seed_, 2 * generation_ + side)));
    if (h_[side]->out_bits() < lg_m_) throw ConfigError("cuckoo: hash has fewer than lg m bits");
  }
  ++generation_;
}

std::size_t CuckooTable::position(int side, std::uint64_t key) const {
  const SchemeHandle& h = *h_[side];
  return static_cast<std::size_t>(top_bits(h(key), h.out_bits(), lg_m_));
}

std::optional<std::uint64_t> CuckooTable::slot(int side, std::size_t i) const {
  const Slot& s = slots_[side].at(i);
  if (!s.used) return std::nullopt;
  return s.key;
}

bool CuckooTable::contains(std::uint64_t key) const {
  for (int side = 0; side < 2; ++side) {
    const Slot& s = slots_[side][position(side, key)];
    if (s.used && s.key == key) return true;
  }
  return false;
}

bool CuckooTable::erase(std::uint64_t key) {
  for (int side = 0; side < 2; ++side) {
    Slot& s = slots_[side][position(side, key)];
    if (s.used && s.key == key) {
      s = Slot{};
      --size_;
      return true;
    }
  }
  return false;
}

CuckooInsertResult CuckooTable::insert(std::uint64_t key) {
  if (contains(key)) throw DuplicateKeyError("cuckoo: key already present");
  struct Change {
    int side;
    std::size_t pos;
    Slot previous;
  };
  std::vector<Change> undo;
  std::uint64_t homeless = key;
  int side = 0;
  for (std::size_t evictions = 0;; ++evictions) {
    const std::size_t pos = position(side, homeless);
    Slot& cell = slots_[side][pos];
    if (!cell.used) {
      cell = Slot{true, homeless};
      ++size_;
      return {CuckooStatus::kPlaced, evictions};
    }
    if (evictions == max_evictions_) {
      for (auto it = undo.rbegin(); it != undo.rend(); ++it) {
        slots_[it->side][it->pos] = it->previous;
      }
      return {CuckooStatus::kNeedsRehash, evictions};
    }
    undo.push_back({side, pos, cell});
    std::swap(homeless, cell.key);
    side ^= 1;
  }
}

bool CuckooTable::rehash() {
  ++rehash_count_;
  std::vector<std::uint64_t> keys;
  keys.reserve(size_);
  for (const auto& table : slots_) {
    for (const Slot& s : table) {
      if (s.used) keys.push_back(s.key);
    }
  }
  auto saved_slots0 = slots_[0];
  auto saved_slots1 = slots_[1];
  auto saved_h0 = h_[0];
  auto saved_h1 = h_[1];
  const std::size_t saved_size = size_;

  draw_functions();
  slots_[0].assign(m_, Slot{});
  slots_[1].assign(m_, Slot{});
  size_ = 0;
  for (std::uint64_t k : keys) {
    if (insert(k).status != CuckooStatus::kPlaced) {
      slots_[0] = std::move(saved_slots0);
      slots_[1] = std::move(saved_slots1);
      h_[0] = std::move(saved_h0);
      h_[1] = std::move(saved_h1);
      size_ = saved_size;
      return false;
    }
  }
  return true;
}

CuckooInsertResult CuckooTable::insert_or_rehash(std::uint64_t key, std::size_t max_rehashes) {
  CuckooInsertResult result = insert(key);
  for (std::size_t attempt = 0; result.status == CuckooStatus::kNeedsRehash; ++attempt) {
    if (attempt == max_rehashes) throw CapacityError("cuckoo: rehash limit reached");
    if (rehash()) result = insert(key);
  }
  return result;
}

bool CuckooTable::audit() const {
  std::size_t count = 0;
  for (int side = 0; side < 2; ++side) {
    for (std::size_t i = 0; i < m_; ++i) {
      const Slot& s = slots_[side][i];
      if (!s.used) continue;
      ++count;
      if (position(side, s.key) != i) return false;
    }
  }
  return count == size_;
}

}  // namespace tabhash
