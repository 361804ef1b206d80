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

// Tangles of the Brauer monoid B_N: perfect matchings on two rows of N nodes,
// composed by stacking, together with the prime generators T_i and U_i.
//
// Conventions used throughout the library:
//  * nodes are 1-based; the bottom row is written with a prime (3' etc.);
//  * compose(X, Y) places X on top of Y;
//  * a Word lists its factors topmost first, so compose_word folds left to
//    right.

#ifndef BRAUER_TANGLE_HPP_
#define BRAUER_TANGLE_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "brauer/error.hpp"

namespace brauer {

enum class Row : std::uint8_t { kTop = 0, kBottom = 1 };

struct NodeRef {
  Row row = Row::kTop;
  int index = 1;

  friend constexpr auto operator<=>(const NodeRef&, const NodeRef&) = default;
};

constexpr NodeRef top(int index) { return {Row::kTop, index}; }
constexpr NodeRef bottom(int index) { return {Row::kBottom, index}; }

// An edge in canonical form: same-row edges have a.index < b.index, and
// transversals have `a` on the top row. Ordering is by `a` first, which puts
// top endpoints before bottom endpoints and then sorts by index.
struct Edge {
  NodeRef a;
  NodeRef b;

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

// Builds the canonical edge joining x and y. Throws kSelfLoop if x == y.
Edge make_edge(NodeRef x, NodeRef y);

enum class EdgeKind : std::uint8_t {
  kUpperHook,
  kLowerHook,
  kPositiveTransversal,
  kZeroTransversal,
  kNegativeTransversal,
};

EdgeKind edge_kind(const Edge& e);
int edge_size(const Edge& e);
bool is_hook(const Edge& e);
bool is_transversal(const Edge& e);

class Tangle {
 public:
  // The empty tangle of B_0.
  Tangle() = default;

  // Validates and canonicalizes. Errors: kDuplicateNode, kUncoveredNode,
  // kIndexOutOfRange, kSelfLoop.
  static Tangle from_pairs(int n, std::span<const std::pair<NodeRef, NodeRef>> pairs);
  static Tangle from_edges(int n, std::span<const Edge> edges);

  // `links[v]` is the node id joined to node id v, where top i has id i-1 and
  // bottom i has id n+i-1. Validates that links is a fixed-point-free
  // involution of size 2n.
  static Tangle from_links(int n, std::vector<std::uint16_t> links);

  int n() const noexcept { return n_; }

  NodeRef partner(NodeRef v) const;
  // The edge incident to v.
  Edge edge_at(NodeRef v) const;
  bool contains(const Edge& e) const;

  // Canonical edges in sorted order.
  std::vector<Edge> edges() const;

  // Raw node-id representation (see from_links).
  std::span<const std::uint16_t> links() const noexcept { return links_; }

  int node_id(NodeRef v) const;
  NodeRef node_at(int id) const;

  friend bool operator==(const Tangle&, const Tangle&) = default;

 private:
  int n_ = 0;
  std::vector<std::uint16_t> links_;
};

struct TangleHash {
  std::size_t operator()(const Tangle& t) const noexcept;
};

enum class PrimeKind : std::uint8_t { kT, kU };

struct Prime {
  PrimeKind kind = PrimeKind::kT;
  int index = 1;

  friend constexpr auto operator<=>(const Prime&, const Prime&) = default;
};

constexpr Prime t_prime(int i) { return {PrimeKind::kT, i}; }
constexpr Prime u_prime(int i) { return {PrimeKind::kU, i}; }

struct Word {
  int n = 0;
  std::vector<Prime> factors;

  std::size_t size() const noexcept { return factors.size(); }
  bool empty() const noexcept { return factors.empty(); }
  int t_count() const;
  int u_count() const;

  friend bool operator==(const Word&, const Word&) = default;
};

// Throws kIndexOutOfRange unless every factor index lies in 1..n-1.
void validate_word(const Word& w);

Tangle make_tangle(int n, std::span<const std::pair<NodeRef, NodeRef>> pairs);
Tangle identity(int n);
Tangle prime(int n, Prime p);
Tangle compose(const Tangle& top, const Tangle& bottom);
Tangle compose_word(const Word& w);
Tangle tensor(const Tangle& left, const Tangle& right);

bool is_identity(const Tangle& x);

// Position of a node on the cyclic boundary order Top 1..N, Bottom N'..1'
// (0-based). Two chords cross iff their endpoints alternate on this cycle.
int boundary_position(int n, NodeRef v);
NodeRef boundary_node(int n, int position);
bool edges_cross(int n, const Edge& e, const Edge& f);

// Number of edges crossing e. Errors: kEdgeNotInTangle.
int edge_crossings(const Tangle& x, const Edge& e);
// Per-edge crossing counts, aligned with x.edges().
std::vector<int> crossing_counts(const Tangle& x);
std::vector<std::pair<Edge, Edge>> crossing_pairs(const Tangle& x);
int total_crossings(const Tangle& x);

struct Component {
  Tangle tangle;
  int offset = 0;

  friend bool operator==(const Component&, const Component&) = default;
};

// Maximal column blocks with no edge leaving the block, left to right.
std::vector<Component> components(const Tangle& x);

// The pair of non-crossing edges that replace the size-one upper hook
// h = (i, i+1) and e, or nullopt when the combination is undefined.
std::optional<std::pair<Edge, Edge>> merge_edges(const Edge& h, const Edge& e);

// Errors: kEdgeNotInTangle, kNotASizeOneUpperHook, kMergeUndefined.
Tangle merge(const Tangle& x, const Edge& h, const Edge& e);

enum class Axis : std::uint8_t { kHorizontal, kVertical };

// Horizontal swaps the two rows; Vertical mirrors indices i -> n+1-i.
Tangle reflect(const Tangle& x, Axis axis);

}  // namespace brauer

#endif  // BRAUER_TANGLE_HPP_
