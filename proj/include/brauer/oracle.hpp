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

// Ground truth for small N: breadth-first search of the right Cayley graph of
// B_N from the identity, expanding U_1..U_{n-1} before T_1..T_{n-1}. The first
// visit of a tangle records a shortest word; the U-first order is meant to
// make that word use as few T-primes as possible, which check_assumption2
// tests against the crossing count.
//
// Tangles are packed into 64 bits (4 bits per node), which caps N at 8.

#ifndef BRAUER_ORACLE_HPP_
#define BRAUER_ORACLE_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <unordered_map>
#include <vector>

#include "brauer/tangle.hpp"

namespace brauer {

inline constexpr int kMaxOracleN = 8;

class MinimalDatabase {
 public:
  using Id = std::uint32_t;

  int n() const noexcept { return n_; }
  std::size_t size() const noexcept { return keys_.size(); }

  // Entries are numbered in BFS discovery order; id 0 is the identity.
  std::optional<Id> find(const Tangle& x) const;
  Tangle tangle(Id id) const;
  Word word(Id id) const;
  int length(Id id) const { return length_[id]; }
  int t_count(Id id) const { return t_count_[id]; }

  // Errors: kSizeMismatch for a tangle of the wrong size, kInternalError
  // when the tangle is missing.
  int length_of(const Tangle& x) const;

  // "<tangle>\t<length>\t<word>" per entry, lines sorted bytewise.
  void write(std::ostream& out) const;

 private:
  friend class DatabaseBuilder;

  int n_ = 0;
  std::vector<std::uint64_t> keys_;
  std::vector<std::int32_t> parent_;
  std::vector<std::uint8_t> last_prime_;
  std::vector<std::uint8_t> length_;
  std::vector<std::uint8_t> t_count_;
  std::unordered_map<std::uint64_t, Id> index_;
};

struct BfsOptions {
  // 0 means no cap; exceeding it throws kResourceLimit.
  std::size_t node_cap = 0;
  // Worker threads for frontier expansion; results are identical for any
  // value because discoveries are committed in sequential order.
  int jobs = 1;
  // Called after each BFS level with (level, entries so far).
  std::function<void(int, std::size_t)> progress;
};

// Errors: kIndexOutOfRange (n < 1), kResourceLimit (n > kMaxOracleN or the
// node cap is hit).
MinimalDatabase bfs_cayley(int n, const BfsOptions& options = {});

// Every tangle of B_n by direct perfect-matching enumeration; (2n-1)!! of
// them. Independent of composition, for cross-checking the BFS.
std::vector<Tangle> enumerate_tangles(int n);

// Histogram: length -> number of tangles.
std::map<int, long long> length_table(const MinimalDatabase& db);

struct MaxMerges {
  int max_count = 0;
  long long num_tangles = 0;

  friend bool operator==(const MaxMerges&, const MaxMerges&) = default;
};

// For each tangle with a size-one upper hook, takes the leftmost such hook h
// and counts the edges e whose merge with h is defined and lowers the length
// by one. Reports the largest count and how many tangles reach it.
MaxMerges max_merges(const MinimalDatabase& db);

struct CrossingMismatch {
  Tangle tangle;
  int crossings = 0;
  int t_count = 0;
};

struct Assumption2Report {
  std::size_t tested = 0;
  std::vector<CrossingMismatch> counterexamples;
};

// Compares each tangle's crossing count with the T-prime count of its stored
// word.
Assumption2Report check_assumption2(const MinimalDatabase& db);

}  // namespace brauer

#endif  // BRAUER_ORACLE_HPP_
