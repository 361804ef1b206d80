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


#include "brauer/temperley_lieb.hpp"

#include <gtest/gtest.h>

#include <algorithm>

#include "brauer/factorizer.hpp"
#include "brauer/format.hpp"
#include "brauer/oracle.hpp"
#include "brauer/tau.hpp"
#include "test_util.hpp"

namespace brauer {
namespace {

const char* kPlanarWord = "U2 U5 U1 U3 U2 U4 U3";

TEST(IsPlanar, Examples) {
  EXPECT_TRUE(is_planar(prime(3, u_prime(2))));
  EXPECT_FALSE(is_planar(prime(2, t_prime(1))));
  EXPECT_TRUE(is_planar(compose_word(parse_word(kPlanarWord, 6))));
}

TEST(Regions, IdentityOfB2) {
  const auto r = regions(identity(2));
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r[0].column, 1);
  EXPECT_EQ(r[0].depth, 0);
  EXPECT_FALSE(r[0].upper);
  EXPECT_FALSE(r[0].lower);
}

TEST(Regions, HookOfB2) {
  const auto r = regions(prime(2, u_prime(1)));
  ASSERT_EQ(r.size(), 3u);
  for (int d = 0; d < 3; ++d) EXPECT_EQ(r[d].depth, d);
  EXPECT_EQ(r[1].upper, (Edge{top(1), top(2)}));
  EXPECT_EQ(r[1].lower, (Edge{bottom(1), bottom(2)}));
  const RegionDag dag = region_dag(prime(2, u_prime(1)));
  ASSERT_EQ(dag.vertices.size(), 1u);
  EXPECT_EQ(dag.vertices[0], r[1]);
  EXPECT_TRUE(dag.arcs.empty());
}

TEST(Regions, PlanarWordColumns) {
  const Tangle x = compose_word(parse_word(kPlanarWord, 6));
  std::vector<int> columns;
  for (const Region& r : region_dag(x).vertices) columns.push_back(r.column);
  std::vector<int> expected{2, 5, 1, 3, 2, 4, 3};
  std::sort(columns.begin(), columns.end());
  std::sort(expected.begin(), expected.end());
  EXPECT_EQ(columns, expected);
}

TEST(FactorizeTl, Examples) {
  const Tangle x = compose_word(parse_word(kPlanarWord, 6));
  EXPECT_EQ(format_word(factorize_tl(x)), kPlanarWord);
  EXPECT_TRUE(factorize_tl(identity(5)).empty());
  EXPECT_EQ(format_word(factorize_tl(prime(2, u_prime(1)))), "U1");
  EXPECT_EQ(format_word(factorize_tl(compose_word(parse_word("U1 U2", 3)))), "U1 U2");
}

TEST(FactorizeTl, RejectsNonPlanar) {
  for (auto f : {+[] { factorize_tl(prime(2, t_prime(1))); },
                 +[] { regions(prime(2, t_prime(1))); },
                 +[] { region_dag(prime(2, t_prime(1))); }}) {
    try {
      f();
      ADD_FAILURE();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kNotPlanar);
    }
  }
}

TEST(FactorizeTl, ExhaustiveAgainstOracle) {
  for (int n = 1; n <= 6; ++n) {
    const MinimalDatabase db = bfs_cayley(n);
    int planar = 0;
    for (MinimalDatabase::Id id = 0; id < db.size(); ++id) {
      const Tangle x = db.tangle(id);
      if (!is_planar(x)) continue;
      ++planar;
      const Word w = factorize_tl(x);
      ASSERT_EQ(compose_word(w), x) << format_tangle(x);
      EXPECT_EQ(static_cast<int>(w.size()), db.length(id)) << format_tangle(x);
      EXPECT_EQ(w.t_count(), 0);
      EXPECT_EQ(static_cast<int>(region_dag(x).vertices.size()), length_p(x));
      EXPECT_EQ(w.size(), factorize(x).size());
    }
    // Catalan numbers count the planar matchings.
    const int catalan[] = {1, 1, 2, 5, 14, 42, 132};
    EXPECT_EQ(planar, catalan[n]);
  }
}

}  // namespace
}  // namespace brauer
