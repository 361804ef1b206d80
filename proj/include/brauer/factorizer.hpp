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

// Minimal factorization of Brauer tangles.
//
// factorize() peels one prime off the top per step. The prime indices come
// from the bubble-sort factorization of tau(x), consumed in order; at index i
// the step is U_i when (i, i+1) is an upper hook of the working tangle, and
// T_i otherwise. A U_i step merges the hook with the first candidate edge
// (canonical order) whose merge lowers l_P by exactly one. Crossing counts
// live in a CrossingTable that is patched in O(N) per trial instead of being
// recomputed, which gives O(N^4) overall.

#ifndef BRAUER_FACTORIZER_HPP_
#define BRAUER_FACTORIZER_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "brauer/tangle.hpp"

namespace brauer {

// Working tangle plus the crossing count #T(e) of each of its edges.
//
// Edges occupy fixed slots; boundary positions follow the chord order of
// boundary_position(). Not thread-safe: trial_merge stages into scratch
// buffers owned by the table.
class CrossingTable {
 public:
  explicit CrossingTable(const Tangle& x);

  int n() const noexcept { return n_; }
  Tangle tangle() const;
  // Canonical order, matching Tangle::edges().
  std::vector<Edge> edges() const;

  // Errors: kEdgeNotInTangle.
  int count(const Edge& e) const;
  int length_p() const;
  int total_crossings() const;

  bool has_upper_hook(int i) const;

  // X <- T_i o X: swaps top nodes i and i+1. Only the two edges at those
  // nodes change their count. Errors: kIndexOutOfRange, and
  // kInternalError when (i, i+1) is itself an edge.
  void compose_t(int i);

  struct MergeOutcome {
    int length_p = 0;
    int total_crossings = 0;
  };

  // Stages the merge of h = (i, i+1) with e and reports the resulting l_P and
  // crossing total; nullopt if the merge is undefined. The table itself is
  // unchanged until commit_trial().
  std::optional<MergeOutcome> trial_merge(int i, const Edge& e);
  void commit_trial();

  // Full O(N^2) recomputation compared against the maintained counts.
  bool matches_recompute() const;

 private:
  Edge slot_edge(int slot) const;
  void set_slot(std::vector<std::int32_t>& lo, std::vector<std::int32_t>& hi, int slot,
                std::int32_t p, std::int32_t q) const;
  int slot_size(std::int32_t lo, std::int32_t hi) const;

  int n_ = 0;
  std::vector<std::int32_t> link_;     // by boundary position
  std::vector<std::int32_t> slot_of_;  // by boundary position
  std::vector<std::int32_t> lo_, hi_, count_, size_;

  struct Trial {
    bool staged = false;
    int hook_slot = -1;
    int edge_slot = -1;
    std::int32_t e1_lo = 0, e1_hi = 0, e2_lo = 0, e2_hi = 0;
    std::vector<std::int32_t> lo, hi, count;
  };
  Trial trial_;
};

struct FactorizeOptions {
  // Among viable merges pick the one leaving the fewest crossings.
  bool min_t = false;
  // Recompute the crossing table after every step and check it, plus the
  // one-per-step decrease of l_P. Throws kInternalError on mismatch.
  bool debug_table = false;
};

// Errors: kNoViableMerge (with a diagnostic dump), kInternalError.
Word factorize(const Tangle& x, const FactorizeOptions& options = {});

using LengthFunction = std::function<int(const Tangle&)>;

// Reference algorithm: works with any exact length function. Errors:
// kNoViableStep.
Word factorize_naive(const Tangle& x, const LengthFunction& length);

struct VerifyResult {
  bool composes = false;
  bool length_minimal = false;

  friend bool operator==(const VerifyResult&, const VerifyResult&) = default;
};

// Errors: kSizeMismatch.
VerifyResult verify(const Tangle& x, const Word& w);

}  // namespace brauer

#endif  // BRAUER_FACTORIZER_HPP_
