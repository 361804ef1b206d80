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

#include "brauer/tau.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "brauer/format.hpp"
#include "brauer/symmetric.hpp"

namespace brauer {
namespace {

Polarity polarity_on_edge(const Edge& e, NodeRef v) {
  switch (edge_kind(e)) {
    case EdgeKind::kPositiveTransversal:
      return Polarity::kPlus;
    case EdgeKind::kNegativeTransversal:
      return Polarity::kMinus;
    case EdgeKind::kZeroTransversal:
      return Polarity::kZero;
    case EdgeKind::kUpperHook:
      return v == e.a ? Polarity::kMinus : Polarity::kPlus;
    case EdgeKind::kLowerHook:
      return v == e.a ? Polarity::kPlus : Polarity::kMinus;
  }
  return Polarity::kZero;
}

// Labels the unkept nodes of one row, left to right, with a counter per sign.
std::vector<std::optional<PolarityLabel>> label_row(const Tangle& x, Row row,
                                                    const std::vector<bool>& kept_node) {
  std::vector<std::optional<PolarityLabel>> labels(static_cast<std::size_t>(x.n()));
  int plus = 0;
  int minus = 0;
  for (int i = 1; i <= x.n(); ++i) {
    const NodeRef v{row, i};
    if (kept_node[static_cast<std::size_t>(x.node_id(v))]) continue;
    const Polarity p = polarity_on_edge(x.edge_at(v), v);
    if (p == Polarity::kZero) {
      throw Error(ErrorCode::kInternalError,
                  "zero-polarity node " + format_node(v) + " on an unkept edge");
    }
    labels[static_cast<std::size_t>(i - 1)] =
        PolarityLabel{p, p == Polarity::kPlus ? ++plus : ++minus};
  }
  return labels;
}

}  // namespace

char polarity_symbol(Polarity p) {
  switch (p) {
    case Polarity::kPlus:
      return '+';
    case Polarity::kMinus:
      return '-';
    case Polarity::kZero:
      return '0';
  }
  return '?';
}

Polarity node_polarity(const Tangle& x, NodeRef v) {
  return polarity_on_edge(x.edge_at(v), v);
}

TauImage tau_with_labels(const Tangle& x) {
  const int n = x.n();
  const std::vector<Edge> edges = x.edges();
  const std::vector<int> crossings = crossing_counts(x);

  TauImage out;
  std::vector<bool> kept_node(2 * static_cast<std::size_t>(n), false);
  for (std::size_t k = 0; k < edges.size(); ++k) {
    if (crossings[k] >= edge_size(edges[k])) {
      out.kept.push_back(edges[k]);
      kept_node[static_cast<std::size_t>(x.node_id(edges[k].a))] = true;
      kept_node[static_cast<std::size_t>(x.node_id(edges[k].b))] = true;
    }
  }
  out.top_labels = label_row(x, Row::kTop, kept_node);
  out.bottom_labels = label_row(x, Row::kBottom, kept_node);

  std::map<std::pair<int, int>, int> bottom_by_label;
  for (int j = 1; j <= n; ++j) {
    if (const auto& l = out.bottom_labels[static_cast<std::size_t>(j - 1)]) {
      bottom_by_label[{static_cast<int>(l->polarity), l->counter}] = j;
    }
  }

  std::vector<std::pair<NodeRef, NodeRef>> pairs;
  for (const Edge& e : out.kept) pairs.emplace_back(e.a, e.b);
  std::size_t matched = 0;
  for (int i = 1; i <= n; ++i) {
    const auto& l = out.top_labels[static_cast<std::size_t>(i - 1)];
    if (!l) continue;
    const auto it = bottom_by_label.find({static_cast<int>(l->polarity), l->counter});
    if (it == bottom_by_label.end()) {
      throw Error(ErrorCode::kInternalError,
                  "label of node " + std::to_string(i) + " has no bottom partner in " +
                      format_tangle(x));
    }
    pairs.emplace_back(top(i), bottom(it->second));
    ++matched;
  }
  if (matched != bottom_by_label.size()) {
    throw Error(ErrorCode::kInternalError,
                "unmatched bottom labels in " + format_tangle(x));
  }
  out.image = Tangle::from_pairs(n, pairs);
  if (!is_permutation_tangle(out.image)) {
    throw Error(ErrorCode::kInternalError,
                "a hook survived tau in " + format_tangle(x));
  }
  return out;
}

Tangle tau(const Tangle& x) { return tau_with_labels(x).image; }

int pass_count(const Tangle& x, const Edge& e) {
  return std::max(edge_crossings(x, e), edge_size(e));
}

int length_p(const Tangle& x, const std::vector<int>& crossings) {
  const std::vector<Edge> edges = x.edges();
  long long sum = 0;
  for (std::size_t k = 0; k < edges.size(); ++k) {
    sum += std::max(crossings[k], edge_size(edges[k]));
  }
  if (sum % 2 != 0) {
    throw Error(ErrorCode::kInternalError,
                "odd pass-count sum for " + format_tangle(x));
  }
  return static_cast<int>(sum / 2);
}

int length_p(const Tangle& x) { return length_p(x, crossing_counts(x)); }

int length_tau(const Tangle& x) {
  return static_cast<int>(inversion_count(to_permutation(tau(x))));
}

}  // namespace brauer
