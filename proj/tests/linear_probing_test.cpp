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

#include <set>
#include <sstream>
#include <vector>

#include "gtest/gtest.h"
#include "oracles.hpp"
#include "tabhash/errors.hpp"
#include "tabhash/random_stream.hpp"

namespace tabhash {
namespace {

using testing::ReferenceLinearProbing;

// c=1 tabulation with 4-bit keys and 3-bit hashes: T[key] is the key's home
// slot in an 8-slot table.
SchemeHandle homes8(const std::vector<std::uint64_t>& homes) {
  return TabulationScheme::from_tables({1, 4, 3}, homes);
}

TEST(LinearProbingTest, FirstInsertTakesOneProbe) {
  LinearProbingTable t(8, homes8({5, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5}));
  EXPECT_EQ(t.insert(3), 1u);
  EXPECT_EQ(t.slot(5), 3u);
  EXPECT_EQ(t.insert(4), 2u);
  EXPECT_EQ(t.slot(6), 4u);
  EXPECT_TRUE(t.audit());
}

TEST(LinearProbingTest, WrapsAround) {
  LinearProbingTable t(8, homes8({7, 7, 7, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}));
  t.insert(0);
  t.insert(1);
  EXPECT_EQ(t.slot(0), 1u);
  EXPECT_EQ(t.insert(3), 2u);
  EXPECT_EQ(t.slot(1), 3u);
  EXPECT_EQ(t.search(1).probes, 2u);
  EXPECT_EQ(t.run_length(0), 3u);  // slots 7, 0, 1
  EXPECT_TRUE(t.audit());
}

TEST(LinearProbingTest, ScriptedFillMatchesReference) {
  const std::vector<std::uint64_t> homes = {2, 2, 3, 2, 7, 6, 7, 0, 1, 3, 3, 5, 4, 4, 6, 0};
  LinearProbingTable t(8, homes8(homes));
  ReferenceLinearProbing ref(8, [&](std::uint64_t k) { return homes[k]; });
  for (std::uint64_t k : {0, 1, 2, 3, 4, 5, 6}) {
    EXPECT_EQ(t.insert(k), ref.insert(k)) << k;
    for (std::size_t s = 0; s < 8; ++s) EXPECT_EQ(t.slot(s), ref.slots()[s]);
  }
  EXPECT_THROW(t.insert(9), CapacityError);  // the last free slot stays free
  EXPECT_TRUE(t.audit());
}

TEST(LinearProbingTest, SearchProbes) {
  LinearProbingTable t(8, homes8({1, 1, 1, 1, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2}));
  t.insert(0);
  t.insert(1);
  t.insert(2);
  EXPECT_EQ(t.search(2).probes, 3u);
  EXPECT_TRUE(t.search(2).found);
  const SearchResult miss = t.search(4);  // home 2, run 2..3
  EXPECT_FALSE(miss.found);
  EXPECT_EQ(miss.probes, 3u);
}

TEST(LinearProbingTest, DeleteSoleKey) {
  LinearProbingTable t(8, homes8(std::vector<std::uint64_t>(16, 4)));
  t.insert(9);
  EXPECT_EQ(t.erase(9), 1u + 1u);  // R = 1 counting the key's own slot
  EXPECT_EQ(t.size(), 0u);
  EXPECT_FALSE(t.search(9).found);
  EXPECT_TRUE(t.audit());
}

TEST(LinearProbingTest, DeleteShiftsCollidingKeyBack) {
  LinearProbingTable t(8, homes8(std::vector<std::uint64_t>(16, 4)));
  t.insert(1);  // A at 4
  t.insert(2);  // B at 5
  EXPECT_EQ(t.erase(1), 3u);
  EXPECT_EQ(t.slot(4), 2u);
  EXPECT_FALSE(t.slot(5).has_value());
  EXPECT_TRUE(t.audit());
}

TEST(LinearProbingTest, DeleteKeepsKeysAtTheirHome) {
  // 0 and 1 home at 2; 2 homes at 3 and is pushed to 4; deleting 0 must
  // move 1 back to 2 and 2 back to 3.
  LinearProbingTable t(8, homes8({2, 2, 3, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}));
  t.insert(0);
  t.insert(1);
  t.insert(2);
  t.erase(0);
  EXPECT_EQ(t.slot(2), 1u);
  EXPECT_EQ(t.slot(3), 2u);
  EXPECT_FALSE(t.slot(4).has_value());
  EXPECT_TRUE(t.audit());
}

TEST(LinearProbingTest, DeleteDoesNotMoveKeyAboveItsHome) {
  LinearProbingTable t(8, homes8({2, 3, 3, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}));
  t.insert(0);  // 2
  t.insert(1);  // 3
  t.insert(2);  // 4
  t.erase(0);
  EXPECT_FALSE(t.slot(2).has_value());
  EXPECT_EQ(t.slot(3), 1u);
  EXPECT_EQ(t.slot(4), 2u);
  EXPECT_TRUE(t.audit());
}

TEST(LinearProbingTest, Errors) {
  LinearProbingTable t(8, homes8(std::vector<std::uint64_t>(16, 0)));
  t.insert(1);
  EXPECT_THROW(t.insert(1), DuplicateKeyError);
  EXPECT_THROW(t.erase(2), NotFoundError);
  EXPECT_THROW(LinearProbingTable(6, homes8(std::vector<std::uint64_t>(16, 0))), ConfigError);
  EXPECT_THROW(LinearProbingTable(16, homes8(std::vector<std::uint64_t>(16, 0))), ConfigError);
}

TEST(LinearProbingTest, DumpFormat) {
  LinearProbingTable t(8, homes8({6, 6, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 3}));
  t.insert(0xf);
  t.insert(0);
  std::ostringstream out;
  t.dump(out);
  EXPECT_EQ(out.str(), "3,f,3\n6,0,6\n");
}

TEST(LinearProbingTest, CountersTrackProbes) {
  LinearProbingTable t(8, homes8(std::vector<std::uint64_t>(16, 0)));
  t.insert(1);
  t.insert(2);
  EXPECT_EQ(t.total_probes(), 3u);
  EXPECT_EQ(t.operations(), 2u);
  EXPECT_EQ(t.last_probes(), 2u);
  t.reset_counters();
  EXPECT_EQ(t.total_probes(), 0u);
}

// Random scripts of up to 50 operations on 16-slot tables.
TEST(LinearProbingTest, RandomScriptsMatchReference) {
  StrongStream rng(77);
  for (int script = 0; script < 500; ++script) {
    const auto scheme = TabulationScheme::from_seed({2, 4, 4}, rng.next());
    LinearProbingTable t(16, scheme);
    ReferenceLinearProbing ref(16, [&](std::uint64_t k) { return t.home(k); });
    std::vector<std::uint64_t> live;
    const std::size_t ops = 1 + rng.below(50);
    for (std::size_t op = 0; op < ops; ++op) {
      const bool erase = !live.empty() && (live.size() >= 14 || rng.below(3) == 0);
      if (erase) {
        const std::size_t i = rng.below(live.size());
        ASSERT_EQ(t.erase(live[i]), ref.erase(live[i]));
        live.erase(live.begin() + static_cast<std::ptrdiff_t>(i));
      } else {
        std::uint64_t k;
        do {
          k = rng.bits(8);
        } while (std::find(live.begin(), live.end(), k) != live.end());
        ASSERT_EQ(t.insert(k), ref.insert(k));
        live.push_back(k);
      }
      for (std::size_t s = 0; s < 16; ++s) ASSERT_EQ(t.slot(s), ref.slots()[s]) << script;
      ASSERT_TRUE(t.audit());
    }
  }
}

TEST(LinearProbingTest, ThousandOpsFinalSetMatchesReference) {
  StrongStream rng(3);
  const auto scheme = TabulationScheme::from_seed({4, 8, 32}, 11);
  LinearProbingTable t(1024, scheme);
  ReferenceLinearProbing ref(1024, [&](std::uint64_t k) { return t.home(k); });
  std::vector<std::uint64_t> live;
  for (int op = 0; op < 1000; ++op) {
    if (!live.empty() && rng.below(3) == 0) {
      const std::size_t i = rng.below(live.size());
      EXPECT_EQ(t.erase(live[i]), ref.erase(live[i]));
      live.erase(live.begin() + static_cast<std::ptrdiff_t>(i));
    } else {
      const std::uint64_t k = rng.bits(32);
      if (std::find(live.begin(), live.end(), k) != live.end()) continue;
      EXPECT_EQ(t.insert(k), ref.insert(k));
      live.push_back(k);
    }
  }
  std::multiset<std::uint64_t> got, want(live.begin(), live.end());
  for (std::size_t s = 0; s < 1024; ++s) {
    if (auto k = t.slot(s)) got.insert(*k);
    EXPECT_EQ(t.slot(s), ref.slots()[s]);
  }
  EXPECT_EQ(got, want);
  EXPECT_TRUE(t.audit());
}

}  // namespace
}  // namespace tabhash
