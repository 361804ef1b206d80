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


// The monoid axioms as a term rewriting system over words, a deterministic
// reduction strategy, and a randomized check that reduction reaches minimal
// length without ever lengthening a word.
//
// Rule numbering: 1..10 delete rules, 11..12 braid rules, 13..16 swap rules.
// Every rule's sides are written over two index variables i and j.

#ifndef BRAUER_REWRITER_HPP_
#define BRAUER_REWRITER_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "brauer/oracle.hpp"
#include "brauer/tangle.hpp"

namespace brauer {

enum class RuleKind { kDelete, kBraid, kSwap };
enum class IndexConstraint { kNone, kAdjacent, kDistant };
enum class Direction { kLeftToRight, kRightToLeft };

// One letter of a rule side: a prime kind over variable 0 (i) or 1 (j).
struct RuleSymbol {
  PrimeKind kind = PrimeKind::kT;
  int var = 0;
};

struct RewriteRule {
  int id = 0;
  RuleKind kind = RuleKind::kDelete;
  IndexConstraint constraint = IndexConstraint::kNone;
  std::vector<RuleSymbol> lhs;
  std::vector<RuleSymbol> rhs;
};

// All 16 rules, ordered by id.
const std::vector<RewriteRule>& rewrite_rules();

// Errors: kIndexOutOfRange unless 1 <= id <= 16.
const RewriteRule& rewrite_rule(int id);

// True when the chosen side of the rule matches w at pos. A variable that
// does not occur in the matched side is bound to free_index.
bool rule_matches(const Word& w, std::size_t pos, const RewriteRule& rule, Direction direction,
                  std::optional<int> free_index = std::nullopt);

// Replaces the matched side with the other side.
// Errors: kNoMatch when rule_matches is false.
Word apply_rule(const Word& w, std::size_t pos, const RewriteRule& rule, Direction direction,
                std::optional<int> free_index = std::nullopt);

struct ReduceOptions {
  // Maximum number of words visited in one braid/swap orbit search.
  std::size_t orbit_cap = 200000;
};

struct ReduceResult {
  Word word;
  // Set when an orbit search hit orbit_cap; word is then the best found.
  bool budget_exhausted = false;
};

// Applies delete rules greedily, then searches the equal-length braid/swap
// orbit breadth-first for a word admitting a delete rule, and repeats. Stops
// when the orbit holds no such word. Never lengthens the word.
ReduceResult reduce(const Word& w, const ReduceOptions& options = {});

struct Assumption1Options {
  // Sample lengths are uniform in [2, max(2, floor(scale * n(n-1)/2))].
  double scale = 2.0;
  std::int64_t patience = 2000000;
  std::uint64_t seed = 0;
  ReduceOptions reduce;
};

struct Assumption1Counterexample {
  Word input;
  Word reduced;
  int minimal_length = 0;
};

struct Assumption1Report {
  int n = 0;
  std::size_t tangles_tested = 0;
  std::vector<Assumption1Counterexample> counterexamples;
  std::size_t budget_exhausted = 0;
  std::int64_t samples = 0;
};

// Random non-minimal words are reduced and compared with the database
// length, once per tangle. Patience drops on every sample that tests no new
// tangle; the run ends at patience 0 or when every tangle has been tested.
Assumption1Report check_assumption1(const MinimalDatabase& db,
                                    const Assumption1Options& options = {});

}  // namespace brauer

#endif  // BRAUER_REWRITER_HPP_
