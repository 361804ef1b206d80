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


#include "brauer/rewriter.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <deque>
#include <random>
#include <string>
#include <unordered_set>

namespace brauer {
namespace {

constexpr PrimeKind T = PrimeKind::kT;
constexpr PrimeKind U = PrimeKind::kU;
constexpr int I = 0;
constexpr int J = 1;

std::vector<RewriteRule> build_rules() {
  using R = RuleKind;
  using C = IndexConstraint;
  return {
      {1, R::kDelete, C::kNone, {{T, I}, {T, I}}, {}},
      {2, R::kDelete, C::kNone, {{U, I}, {U, I}}, {{U, I}}},
      {3, R::kDelete, C::kNone, {{T, I}, {U, I}}, {{U, I}}},
      {4, R::kDelete, C::kNone, {{U, I}, {T, I}}, {{U, I}}},
      {5, R::kDelete, C::kAdjacent, {{U, I}, {U, J}, {U, I}}, {{U, I}}},
      {6, R::kDelete, C::kAdjacent, {{U, I}, {T, J}, {U, I}}, {{U, I}}},
      {7, R::kDelete, C::kAdjacent, {{T, I}, {U, J}, {U, I}}, {{T, J}, {U, I}}},
      {8, R::kDelete, C::kAdjacent, {{U, I}, {U, J}, {T, I}}, {{U, I}, {T, J}}},
      {9, R::kDelete, C::kAdjacent, {{U, I}, {T, J}, {T, I}}, {{U, I}, {U, J}}},
      {10, R::kDelete, C::kAdjacent, {{T, I}, {T, J}, {U, I}}, {{U, J}, {U, I}}},
      {11, R::kBraid, C::kAdjacent, {{T, I}, {T, J}, {T, I}}, {{T, J}, {T, I}, {T, J}}},
      {12, R::kBraid, C::kAdjacent, {{T, I}, {U, J}, {T, I}}, {{T, J}, {U, I}, {T, J}}},
      {13, R::kSwap, C::kDistant, {{T, I}, {T, J}}, {{T, J}, {T, I}}},
      {14, R::kSwap, C::kDistant, {{T, I}, {U, J}}, {{U, J}, {T, I}}},
      {15, R::kSwap, C::kDistant, {{U, I}, {T, J}}, {{T, J}, {U, I}}},
      {16, R::kSwap, C::kDistant, {{U, I}, {U, J}}, {{U, J}, {U, I}}},
  };
}

struct Match {
  std::array<std::optional<int>, 2> binding;
};

bool uses_var(const RewriteRule& rule, int var) {
  auto has = [var](const std::vector<RuleSymbol>& side) {
    return std::any_of(side.begin(), side.end(),
                       [var](const RuleSymbol& s) { return s.var == var; });
  };
  return has(rule.lhs) || has(rule.rhs);
}

std::optional<Match> match(const Word& w, std::size_t pos, const RewriteRule& rule,
                           Direction direction, std::optional<int> free_index) {
  const auto& side = direction == Direction::kLeftToRight ? rule.lhs : rule.rhs;
  if (pos > w.size() || side.size() > w.size() - pos) return std::nullopt;
  Match m;
  for (std::size_t k = 0; k < side.size(); ++k) {
    const Prime p = w.factors[pos + k];
    if (p.kind != side[k].kind) return std::nullopt;
    auto& slot = m.binding[side[k].var];
    if (slot && *slot != p.index) return std::nullopt;
    slot = p.index;
  }
  for (int var : {I, J}) {
    if (m.binding[var] || !uses_var(rule, var)) continue;
    if (!free_index || *free_index < 1 || *free_index > w.n - 1) return std::nullopt;
    m.binding[var] = free_index;
  }
  if (rule.constraint != IndexConstraint::kNone) {
    const int gap = std::abs(*m.binding[I] - *m.binding[J]);
    if (rule.constraint == IndexConstraint::kAdjacent ? gap != 1 : gap <= 1) {
      return std::nullopt;
    }
  }
  return m;
}

std::string word_key(const Word& w) {
  std::string key;
  key.reserve(w.size());
  for (const Prime& p : w.factors) {
    key.push_back(static_cast<char>((p.kind == PrimeKind::kU ? 0x80 : 0) | p.index));
  }
  return key;
}

std::vector<const RewriteRule*> select_rules(bool deletes) {
  std::vector<const RewriteRule*> out;
  for (const RewriteRule& r : rewrite_rules()) {
    if ((r.kind == RuleKind::kDelete) == deletes) out.push_back(&r);
  }
  return out;
}

const std::vector<const RewriteRule*>& delete_rules() {
  static const std::vector<const RewriteRule*> rules = select_rules(true);
  return rules;
}

// Braid and swap rules. The inverse of every left-to-right move is itself a
// left-to-right move of some rule, so this direction alone spans the orbit.
const std::vector<const RewriteRule*>& move_rules() {
  static const std::vector<const RewriteRule*> rules = select_rules(false);
  return rules;
}

// First delete rule (by position, then id) applied to w, if any.
std::optional<Word> delete_once(const Word& w) {
  for (std::size_t pos = 0; pos < w.size(); ++pos) {
    for (const RewriteRule* rule : delete_rules()) {
      if (match(w, pos, *rule, Direction::kLeftToRight, std::nullopt)) {
        return apply_rule(w, pos, *rule, Direction::kLeftToRight);
      }
    }
  }
  return std::nullopt;
}

Word delete_greedily(Word w) {
  while (auto next = delete_once(w)) w = std::move(*next);
  return w;
}

}  // namespace

const std::vector<RewriteRule>& rewrite_rules() {
  static const std::vector<RewriteRule> rules = build_rules();
  return rules;
}

const RewriteRule& rewrite_rule(int id) {
  if (id < 1 || id > 16) {
    throw Error(ErrorCode::kIndexOutOfRange, "rule id " + std::to_string(id) + " not in 1..16");
  }
  return rewrite_rules()[id - 1];
}

bool rule_matches(const Word& w, std::size_t pos, const RewriteRule& rule, Direction direction,
                  std::optional<int> free_index) {
  return match(w, pos, rule, direction, free_index).has_value();
}

Word apply_rule(const Word& w, std::size_t pos, const RewriteRule& rule, Direction direction,
                std::optional<int> free_index) {
  const auto m = match(w, pos, rule, direction, free_index);
  if (!m) {
    throw Error(ErrorCode::kNoMatch,
                "rule " + std::to_string(rule.id) + " does not match at " + std::to_string(pos));
  }
  const bool ltr = direction == Direction::kLeftToRight;
  const auto& from = ltr ? rule.lhs : rule.rhs;
  const auto& to = ltr ? rule.rhs : rule.lhs;
  Word out{w.n, {}};
  out.factors.reserve(w.size() - from.size() + to.size());
  out.factors.insert(out.factors.end(), w.factors.begin(), w.factors.begin() + pos);
  for (const RuleSymbol& s : to) out.factors.push_back({s.kind, *m->binding[s.var]});
  out.factors.insert(out.factors.end(), w.factors.begin() + pos + from.size(), w.factors.end());
  return out;
}

ReduceResult reduce(const Word& w, const ReduceOptions& options) {
  validate_word(w);
  ReduceResult result{delete_greedily(w), false};
  while (true) {
    // Breadth-first over the braid/swap orbit of the current word.
    std::deque<Word> queue{result.word};
    std::unordered_set<std::string> visited{word_key(result.word)};
    std::optional<Word> shorter;
    while (!queue.empty() && !shorter) {
      Word v = std::move(queue.front());
      queue.pop_front();
      if (auto next = delete_once(v)) {
        shorter = std::move(*next);
        break;
      }
      for (std::size_t pos = 0; pos < v.size(); ++pos) {
        for (const RewriteRule* rule : move_rules()) {
          if (!match(v, pos, *rule, Direction::kLeftToRight, std::nullopt)) continue;
          Word u = apply_rule(v, pos, *rule, Direction::kLeftToRight);
          if (visited.contains(word_key(u))) continue;
          if (visited.size() >= options.orbit_cap) {
            result.budget_exhausted = true;
            continue;
          }
          visited.insert(word_key(u));
          queue.push_back(std::move(u));
        }
      }
    }
    if (!shorter) return result;
    result.word = delete_greedily(std::move(*shorter));
  }
}

Assumption1Report check_assumption1(const MinimalDatabase& db,
                                    const Assumption1Options& options) {
  Assumption1Report report;
  const int n = db.n();
  report.n = n;
  if (n < 2) return report;
  const int max_len =
      std::max(2, static_cast<int>(options.scale * n * (n - 1) / 2.0));
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<int> length_dist(2, max_len);
  std::uniform_int_distribution<int> prime_dist(0, 2 * (n - 1) - 1);
  std::vector<bool> tested(db.size(), false);
  std::int64_t patience = options.patience;
  while (patience > 0 && report.tangles_tested < db.size()) {
    ++report.samples;
    Word w{n, {}};
    const int len = length_dist(rng);
    for (int k = 0; k < len; ++k) {
      const int r = prime_dist(rng);
      w.factors.push_back(r < n - 1 ? t_prime(r + 1) : u_prime(r - (n - 1) + 1));
    }
    const auto id = db.find(compose_word(w));
    if (!id) throw Error(ErrorCode::kInternalError, "sample tangle missing from database");
    if (tested[*id] || static_cast<int>(w.size()) == db.length(*id)) {
      --patience;
      continue;
    }
    tested[*id] = true;
    ++report.tangles_tested;
    ReduceResult reduced = reduce(w, options.reduce);
    if (reduced.budget_exhausted) ++report.budget_exhausted;
    if (compose_word(reduced.word) != compose_word(w)) {
      throw Error(ErrorCode::kInternalError, "reduction changed the tangle");
    }
    if (static_cast<int>(reduced.word.size()) != db.length(*id)) {
      report.counterexamples.push_back({w, reduced.word, db.length(*id)});
    }
  }
  return report;
}

}  // namespace brauer
