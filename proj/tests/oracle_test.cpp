// Copyright 2026 The Brauer Factorization Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "brauer/oracle.hpp"

#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "brauer/format.hpp"
#include "brauer/tau.hpp"
#include "test_util.hpp"

namespace brauer {
namespace {

long long double_factorial(int n) {
  long long r = 1;
  for (int k = 2 * n - 1; k > 1; k -= 2) r *= k;
  return r;
}

TEST(Bfs, SizesMatchPerfectMatchingCount) {
  const long long expected[] = {1, 3, 15, 105, 945, 10395};
  for (int n = 1; n <= 6; ++n) {
    EXPECT_EQ(static_cast<long long>(bfs_cayley(n).size()), expected[n - 1]);
    EXPECT_EQ(static_cast<long long>(enumerate_tangles(n).size()), double_factorial(n));
  }
}

TEST(Bfs, B2Entries) {
  const MinimalDatabase db = bfs_cayley(2);
  ASSERT_EQ(db.size(), 3u);
  EXPECT_EQ(db.length_of(identity(2)), 0);
  EXPECT_EQ(db.length_of(prime(2, t_prime(1))), 1);
  EXPECT_EQ(db.length_of(prime(2, u_prime(1))), 1);
  EXPECT_EQ(db.tangle(0), identity(2));
}

TEST(Bfs, T1U2Lookup) { EXPECT_EQ(bfs_cayley(3).length_of(testing::t1u2_tangle()), 2); }

TEST(Bfs, Errors) {
  EXPECT_THROW(bfs_cayley(0), Error);
  try {
    bfs_cayley(9);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kResourceLimit);
  }
  try {
    bfs_cayley(5, {.node_cap = 100});
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kResourceLimit);
  }
  EXPECT_THROW(bfs_cayley(3).length_of(identity(2)), Error);
}

// Every stored word composes to its key, has the stored length, and the
// database covers exactly the enumerated tangles.
TEST(Bfs, EntriesAreConsistent) {
  for (int n = 1; n <= 6; ++n) {
    const MinimalDatabase db = bfs_cayley(n);
    for (MinimalDatabase::Id id = 0; id < db.size(); ++id) {
      const Word w = db.word(id);
      ASSERT_EQ(compose_word(w), db.tangle(id));
      ASSERT_EQ(static_cast<int>(w.size()), db.length(id));
      ASSERT_EQ(w.t_count(), db.t_count(id));
      ASSERT_EQ(db.find(db.tangle(id)), id);
      ASSERT_EQ(db.length(id), length_p(db.tangle(id)));
      ASSERT_EQ(db.length(id), length_tau(db.tangle(id)));
    }
    for (const Tangle& x : enumerate_tangles(n)) ASSERT_TRUE(db.find(x)) << format_tangle(x);
  }
}

TEST(Bfs, ParallelIsIdentical) {
  for (int n : {5, 6}) {
    std::ostringstream one, four;
    bfs_cayley(n).write(one);
    bfs_cayley(n, {.jobs = 4}).write(four);
    EXPECT_EQ(one.str(), four.str());
  }
}

TEST(Database, WriteFormat) {
  std::ostringstream out;
  bfs_cayley(2).write(out);
  EXPECT_EQ(out.str(),
            "B2: (1,1') (2,2')\t0\t\n"
            "B2: (1,2') (2,1')\t1\tT1\n"
            "B2: (1,2) (1',2')\t1\tU1\n");
}

TEST(LengthTable, KnownSpectraUpToSix) {
  using M = std::map<int, long long>;
  EXPECT_EQ(length_table(bfs_cayley(1)), (M{{0, 1}}));
  EXPECT_EQ(length_table(bfs_cayley(2)), (M{{0, 1}, {1, 2}}));
  EXPECT_EQ(length_table(bfs_cayley(3)), (M{{0, 1}, {1, 4}, {2, 8}, {3, 2}}));
  EXPECT_EQ(length_table(bfs_cayley(4)),
            (M{{0, 1}, {1, 6}, {2, 20}, {3, 36}, {4, 30}, {5, 10}, {6, 2}}));
  const std::vector<long long> n5{1, 8, 36, 102, 196, 228, 212, 106, 42, 12, 2};
  const std::vector<long long> n6{1,    10,   56,   208, 562, 1110, 1650, 1966,
                                  1914, 1440, 830, 414, 162, 56,   14,   2};
  const auto t5 = length_table(bfs_cayley(5));
  const auto t6 = length_table(bfs_cayley(6));
  ASSERT_EQ(t5.size(), n5.size());
  ASSERT_EQ(t6.size(), n6.size());
  for (int k = 0; k < static_cast<int>(n5.size()); ++k) EXPECT_EQ(t5.at(k), n5[k]);
  for (int k = 0; k < static_cast<int>(n6.size()); ++k) EXPECT_EQ(t6.at(k), n6[k]);
}

TEST(MaxMerges, KnownValuesUpToSix) {
  EXPECT_EQ(max_merges(bfs_cayley(2)), (MaxMerges{1, 1}));
  EXPECT_EQ(max_merges(bfs_cayley(3)), (MaxMerges{1, 6}));
  EXPECT_EQ(max_merges(bfs_cayley(4)), (MaxMerges{2, 2}));
  EXPECT_EQ(max_merges(bfs_cayley(5)), (MaxMerges{2, 46}));
  EXPECT_EQ(max_merges(bfs_cayley(6)), (MaxMerges{3, 18}));
}

TEST(MaxMerges, SevenStrands) {
  EXPECT_EQ(max_merges(bfs_cayley(7)), (MaxMerges{3, 900}));
}

TEST(MaxMerges, EvenEntriesFollowFactorialFormula) {
  // B(2k) = k! |B_{k-1}|.
  EXPECT_EQ(max_merges(bfs_cayley(4)).num_tangles, 2 * 1);
  EXPECT_EQ(max_merges(bfs_cayley(6)).num_tangles, 6 * 3);
}

TEST(Assumption2, ZeroCounterexamples) {
  for (int n = 1; n <= 6; ++n) {
    const Assumption2Report r = check_assumption2(bfs_cayley(n));
    EXPECT_EQ(r.tested, static_cast<std::size_t>(double_factorial(n)));
    EXPECT_TRUE(r.counterexamples.empty()) << "n=" << n;
  }
}

TEST(Assumption2, SevenStrands) {
  const Assumption2Report r = check_assumption2(bfs_cayley(7));
  EXPECT_EQ(r.tested, 135135u);
  EXPECT_TRUE(r.counterexamples.empty());
}

}  // namespace
}  // namespace brauer
