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

// Node polarity, the projection tau : B_N -> S_N and the two length
// functions built on it.
//
// An edge e is "kept" when its crossing count #T(e) is at least its size |e|;
// kept edges pass through T-primes only and survive tau verbatim. Every other
// node gets a polarity label (+j / -j, counted left to right per row) and tau
// joins the top and bottom nodes that carry equal labels.

#ifndef BRAUER_TAU_HPP_
#define BRAUER_TAU_HPP_

#include <optional>
#include <vector>

#include "brauer/tangle.hpp"

namespace brauer {

enum class Polarity : std::int8_t { kMinus = -1, kZero = 0, kPlus = 1 };

struct PolarityLabel {
  Polarity polarity = Polarity::kPlus;
  int counter = 1;

  friend bool operator==(const PolarityLabel&, const PolarityLabel&) = default;
};

char polarity_symbol(Polarity p);

// Transversal endpoints take the transversal's sign; an upper hook's left node
// is minus and its right node plus; lower hooks are the other way round.
Polarity node_polarity(const Tangle& x, NodeRef v);

struct TauImage {
  Tangle image;
  // Indexed by node index - 1; nullopt for nodes on kept edges.
  std::vector<std::optional<PolarityLabel>> top_labels;
  std::vector<std::optional<PolarityLabel>> bottom_labels;
  std::vector<Edge> kept;
};

// Errors: kInternalError when the two rows' label sets disagree.
TauImage tau_with_labels(const Tangle& x);
Tangle tau(const Tangle& x);

// max(#T(e), |e|). Errors: kEdgeNotInTangle.
int pass_count(const Tangle& x, const Edge& e);

// Half the sum of pass counts; kInternalError if the sum is odd.
int length_p(const Tangle& x);
// Same, given crossing counts aligned with x.edges().
int length_p(const Tangle& x, const std::vector<int>& crossings);

// Inversions of tau(x).
int length_tau(const Tangle& x);

}  // namespace brauer

#endif  // BRAUER_TAU_HPP_
