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


#include "brauer/format.hpp"

#include <gtest/gtest.h>

#include <random>

#include "brauer/oracle.hpp"
#include "test_util.hpp"

namespace brauer {
namespace {

ErrorCode parse_error_of(std::string_view text) {
  try {
    parse_tangle(text);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error for " << text;
  return ErrorCode::kInternalError;
}

TEST(FormatTangle, Canonical) {
  EXPECT_EQ(format_tangle(testing::t1u2_tangle()), "B3: (1,3) (2,1') (2',3')");
  EXPECT_EQ(format_tangle(identity(0)), "B0:");
}

TEST(ParseTangle, ArbitraryWhitespaceAndOrder) {
  EXPECT_EQ(parse_tangle("B3:(2',3')(1,3)   (1',2)"), testing::t1u2_tangle());
  EXPECT_EQ(parse_tangle("  B3: ( 3 , 1 ) (2,1')\t(3',2')  "), testing::t1u2_tangle());
  EXPECT_EQ(parse_tangle("B0:"), identity(0));
}

TEST(ParseTangle, Errors) {
  EXPECT_EQ(parse_error_of("B3 (1,3)"), ErrorCode::kParseError);
  EXPECT_EQ(parse_error_of("X3: (1,3)"), ErrorCode::kParseError);
  EXPECT_EQ(parse_error_of("B3: (1,3) (2,1') (2',3') junk"), ErrorCode::kParseError);
  EXPECT_EQ(parse_error_of("B2: (1,1') (1,2')"), ErrorCode::kDuplicateNode);
  EXPECT_EQ(parse_error_of("B2: (1,1')"), ErrorCode::kUncoveredNode);
  EXPECT_EQ(parse_error_of("B2: (1,3) (2,1') (2',3')"), ErrorCode::kIndexOutOfRange);
  EXPECT_EQ(parse_error_of("B2: (0,1') (2,2')"), ErrorCode::kIndexOutOfRange);
  EXPECT_EQ(parse_error_of("B1: (1,1)"), ErrorCode::kSelfLoop);
}

TEST(FormatWord, RoundTrip) {
  const Word w = parse_word("T1 U2 U3 T1 T2");
  EXPECT_EQ(w.n, 4);
  EXPECT_EQ(format_word(w), "T1 U2 U3 T1 T2");
  EXPECT_EQ(w.t_count(), 3);
  EXPECT_EQ(w.u_count(), 2);
  EXPECT_EQ(parse_word("  T1\tU2 \n", 3).n, 3);
  EXPECT_TRUE(parse_word("", 3).empty());
  EXPECT_EQ(format_word(Word{3, {}}), "");
}

TEST(ParseWord, Errors) {
  EXPECT_THROW(parse_word("T1 X2"), Error);
  EXPECT_THROW(parse_word("T"), Error);
  EXPECT_THROW(parse_word("T0"), Error);
  try {
    parse_word("T3", 3);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kIndexOutOfRange);
  }
}

TEST(RoundTrip, ExhaustiveUpToSix) {
  for (int n = 0; n <= 6; ++n) {
    for (const Tangle& x : enumerate_tangles(n)) {
      ASSERT_EQ(parse_tangle(format_tangle(x)), x);
    }
  }
}

TEST(RoundTrip, RandomWords) {
  std::mt19937_64 rng(21);
  for (int n = 2; n <= 12; ++n) {
    for (int trial = 0; trial < 100; ++trial) {
      const Word w = testing::random_word(n, static_cast<int>(rng() % 25), rng);
      EXPECT_EQ(parse_word(format_word(w), n), w);
    }
  }
}

TEST(ErrorName, Stable) {
  EXPECT_EQ(error_name(ErrorCode::kDuplicateNode), "DuplicateNode");
  EXPECT_EQ(error_name(ErrorCode::kNoViableMerge), "NoViableMerge");
  EXPECT_EQ(error_name(ErrorCode::kResourceLimit), "ResourceLimit");
}

}  // namespace
}  // namespace brauer
