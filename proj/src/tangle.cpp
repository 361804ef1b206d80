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

#include "brauer/tangle.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <string>

#include "brauer/format.hpp"
#include "brauer/kernels.hpp"

namespace brauer {
namespace {

constexpr int kMaxN = std::numeric_limits<std::uint16_t>::max() / 2;

void check_n(int n) {
  if (n < 0 || n > kMaxN) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "tangle size " + std::to_string(n) + " out of range");
  }
}

std::uint16_t id_of(int n, NodeRef v) {
  return static_cast<std::uint16_t>(v.row == Row::kTop ? v.index - 1
                                                       : n + v.index - 1);
}

}  // namespace

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParseError:
      return "ParseError";
    case ErrorCode::kDuplicateNode:
      return "DuplicateNode";
    case ErrorCode::kUncoveredNode:
      return "UncoveredNode";
    case ErrorCode::kIndexOutOfRange:
      return "IndexOutOfRange";
    case ErrorCode::kSelfLoop:
      return "SelfLoop";
    case ErrorCode::kSizeMismatch:
      return "SizeMismatch";
    case ErrorCode::kEdgeNotInTangle:
      return "EdgeNotInTangle";
    case ErrorCode::kMergeUndefined:
      return "MergeUndefined";
    case ErrorCode::kNotASizeOneUpperHook:
      return "NotASizeOneUpperHook";
    case ErrorCode::kNotAPermutationTangle:
      return "NotAPermutationTangle";
    case ErrorCode::kNotPlanar:
      return "NotPlanar";
    case ErrorCode::kNoViableMerge:
      return "NoViableMerge";
    case ErrorCode::kNoViableStep:
      return "NoViableStep";
    case ErrorCode::kNoMatch:
      return "NoMatch";
    case ErrorCode::kResourceLimit:
      return "ResourceLimit";
    case ErrorCode::kInternalError:
      return "InternalError";
  }
  return "UnknownError";
}

Edge make_edge(NodeRef x, NodeRef y) {
  if (x == y) {
    throw Error(ErrorCode::kSelfLoop, "edge joins " + format_node(x) + " to itself");
  }
  if (x.row == y.row) {
    return x.index < y.index ? Edge{x, y} : Edge{y, x};
  }
  return x.row == Row::kTop ? Edge{x, y} : Edge{y, x};
}

EdgeKind edge_kind(const Edge& e) {
  if (e.a.row == e.b.row) {
    return e.a.row == Row::kTop ? EdgeKind::kUpperHook : EdgeKind::kLowerHook;
  }
  if (e.a.index > e.b.index) return EdgeKind::kPositiveTransversal;
  if (e.a.index == e.b.index) return EdgeKind::kZeroTransversal;
  return EdgeKind::kNegativeTransversal;
}

int edge_size(const Edge& e) { return std::abs(e.a.index - e.b.index); }

bool is_hook(const Edge& e) { return e.a.row == e.b.row; }
bool is_transversal(const Edge& e) { return e.a.row != e.b.row; }

Tangle Tangle::from_pairs(int n,
                          std::span<const std::pair<NodeRef, NodeRef>> pairs) {
  check_n(n);
  constexpr std::uint16_t kUnset = std::numeric_limits<std::uint16_t>::max();
  std::vector<std::uint16_t> links(2 * static_cast<std::size_t>(n), kUnset);
  for (const auto& [x, y] : pairs) {
    for (const NodeRef v : {x, y}) {
      if (v.index < 1 || v.index > n) {
        throw Error(ErrorCode::kIndexOutOfRange,
                    "node " + format_node(v) + " outside 1.." + std::to_string(n));
      }
    }
    if (x == y) {
      throw Error(ErrorCode::kSelfLoop, "edge joins " + format_node(x) + " to itself");
    }
    const std::uint16_t ix = id_of(n, x);
    const std::uint16_t iy = id_of(n, y);
    for (const std::uint16_t id : {ix, iy}) {
      if (links[id] != kUnset) {
        throw Error(ErrorCode::kDuplicateNode,
                    "node " + format_node(id == ix ? x : y) + " used twice");
      }
    }
    links[ix] = iy;
    links[iy] = ix;
  }
  for (std::size_t id = 0; id < links.size(); ++id) {
    if (links[id] == kUnset) {
      const int i = static_cast<int>(id);
      const NodeRef v = i < n ? top(i + 1) : bottom(i - n + 1);
      throw Error(ErrorCode::kUncoveredNode, "node " + format_node(v) + " is not covered");
    }
  }
  Tangle t;
  t.n_ = n;
  t.links_ = std::move(links);
  return t;
}

Tangle Tangle::from_edges(int n, std::span<const Edge> edges) {
  std::vector<std::pair<NodeRef, NodeRef>> pairs;
  pairs.reserve(edges.size());
  for (const Edge& e : edges) pairs.emplace_back(e.a, e.b);
  return from_pairs(n, pairs);
}

Tangle Tangle::from_links(int n, std::vector<std::uint16_t> links) {
  check_n(n);
  if (links.size() != 2 * static_cast<std::size_t>(n)) {
    throw Error(ErrorCode::kSizeMismatch, "link table has wrong size");
  }
  for (std::size_t v = 0; v < links.size(); ++v) {
    const std::size_t w = links[v];
    if (w >= links.size() || w == v || links[w] != v) {
      throw Error(ErrorCode::kInternalError, "link table is not a perfect matching");
    }
  }
  Tangle t;
  t.n_ = n;
  t.links_ = std::move(links);
  return t;
}

int Tangle::node_id(NodeRef v) const {
  if (v.index < 1 || v.index > n_) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "node " + format_node(v) + " outside 1.." + std::to_string(n_));
  }
  return id_of(n_, v);
}

NodeRef Tangle::node_at(int id) const {
  return id < n_ ? top(id + 1) : bottom(id - n_ + 1);
}

NodeRef Tangle::partner(NodeRef v) const { return node_at(links_[node_id(v)]); }

Edge Tangle::edge_at(NodeRef v) const { return make_edge(v, partner(v)); }

bool Tangle::contains(const Edge& e) const {
  if (e.a.index < 1 || e.a.index > n_ || e.b.index < 1 || e.b.index > n_) {
    return false;
  }
  return e.a != e.b && links_[id_of(n_, e.a)] == id_of(n_, e.b);
}

std::vector<Edge> Tangle::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(n_));
  for (int v = 0; v < 2 * n_; ++v) {
    const int w = links_[v];
    if (v < w) out.push_back({node_at(v), node_at(w)});
  }
  return out;
}

std::size_t TangleHash::operator()(const Tangle& t) const noexcept {
  std::uint64_t h = 1469598103934665603ULL ^ static_cast<std::uint64_t>(t.n());
  for (const std::uint16_t v : t.links()) {
    h ^= v;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

int Word::t_count() const {
  return static_cast<int>(std::count_if(factors.begin(), factors.end(), [](const Prime& p) {
    return p.kind == PrimeKind::kT;
  }));
}

int Word::u_count() const { return static_cast<int>(factors.size()) - t_count(); }

void validate_word(const Word& w) {
  check_n(w.n);
  for (const Prime& p : w.factors) {
    if (p.index < 1 || p.index > w.n - 1) {
      throw Error(ErrorCode::kIndexOutOfRange,
                  "prime " + format_prime(p) + " invalid in B" + std::to_string(w.n));
    }
  }
}

Tangle make_tangle(int n, std::span<const std::pair<NodeRef, NodeRef>> pairs) {
  return Tangle::from_pairs(n, pairs);
}

Tangle identity(int n) {
  check_n(n);
  std::vector<std::uint16_t> links(2 * static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    links[i] = static_cast<std::uint16_t>(n + i);
    links[n + i] = static_cast<std::uint16_t>(i);
  }
  return Tangle::from_links(n, std::move(links));
}

Tangle prime(int n, Prime p) {
  if (p.index < 1 || p.index > n - 1) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "prime " + format_prime(p) + " invalid in B" + std::to_string(n));
  }
  const Tangle base = identity(n);
  std::vector<std::uint16_t> links(base.links().begin(), base.links().end());
  const auto i = static_cast<std::uint16_t>(p.index - 1);
  const auto j = static_cast<std::uint16_t>(p.index);
  const auto bi = static_cast<std::uint16_t>(n + i);
  const auto bj = static_cast<std::uint16_t>(n + j);
  auto join = [&links](std::uint16_t a, std::uint16_t b) {
    links[a] = b;
    links[b] = a;
  };
  if (p.kind == PrimeKind::kT) {
    join(i, bj);
    join(j, bi);
  } else {
    join(i, j);
    join(bi, bj);
  }
  return Tangle::from_links(n, std::move(links));
}

Tangle compose(const Tangle& top_tangle, const Tangle& bottom_tangle) {
  if (top_tangle.n() != bottom_tangle.n()) {
    throw Error(ErrorCode::kSizeMismatch,
                "cannot compose B" + std::to_string(top_tangle.n()) + " with B" +
                    std::to_string(bottom_tangle.n()));
  }
  const int n = top_tangle.n();
  const auto x = top_tangle.links();
  const auto y = bottom_tangle.links();
  // Follows a path that has just left X towards X-id v until it reaches an
  // outer node. Middle node m is X's bottom m and Y's top m.
  auto follow_from_x = [&](int v) -> std::uint16_t {
    while (true) {
      if (v < n) return static_cast<std::uint16_t>(v);
      const int w = y[v - n];
      if (w >= n) return static_cast<std::uint16_t>(w);
      v = x[n + w];
    }
  };
  std::vector<std::uint16_t> links(2 * static_cast<std::size_t>(n));
  for (int t = 0; t < n; ++t) links[t] = follow_from_x(x[t]);
  for (int b = n; b < 2 * n; ++b) {
    const int w = y[b];
    links[b] = w >= n ? static_cast<std::uint16_t>(w) : follow_from_x(x[n + w]);
  }
  return Tangle::from_links(n, std::move(links));
}

Tangle compose_word(const Word& w) {
  validate_word(w);
  Tangle result = identity(w.n);
  for (const Prime& p : w.factors) result = compose(result, prime(w.n, p));
  return result;
}

Tangle tensor(const Tangle& left, const Tangle& right) {
  const int nx = left.n();
  const int ny = right.n();
  const int n = nx + ny;
  check_n(n);
  std::vector<std::uint16_t> links(2 * static_cast<std::size_t>(n));
  auto map_left = [&](int id) { return id < nx ? id : n + (id - nx); };
  auto map_right = [&](int id) { return id < ny ? nx + id : n + nx + (id - ny); };
  for (int id = 0; id < 2 * nx; ++id) {
    links[map_left(id)] = static_cast<std::uint16_t>(map_left(left.links()[id]));
  }
  for (int id = 0; id < 2 * ny; ++id) {
    links[map_right(id)] = static_cast<std::uint16_t>(map_right(right.links()[id]));
  }
  return Tangle::from_links(n, std::move(links));
}

bool is_identity(const Tangle& x) {
  const int n = x.n();
  for (int i = 0; i < n; ++i) {
    if (x.links()[i] != n + i) return false;
  }
  return true;
}

int boundary_position(int n, NodeRef v) {
  return v.row == Row::kTop ? v.index - 1 : 2 * n - v.index;
}

NodeRef boundary_node(int n, int position) {
  return position < n ? top(position + 1) : bottom(2 * n - position);
}

bool edges_cross(int n, const Edge& e, const Edge& f) {
  int p = boundary_position(n, e.a);
  int q = boundary_position(n, e.b);
  if (p > q) std::swap(p, q);
  const int r = boundary_position(n, f.a);
  const int s = boundary_position(n, f.b);
  return (p < r && r < q) != (p < s && s < q);
}

namespace {

struct ChordArrays {
  std::vector<std::int32_t> lo;
  std::vector<std::int32_t> hi;
};

ChordArrays chords_of(int n, std::span<const Edge> edges) {
  ChordArrays out;
  out.lo.reserve(edges.size());
  out.hi.reserve(edges.size());
  for (const Edge& e : edges) {
    const int p = boundary_position(n, e.a);
    const int q = boundary_position(n, e.b);
    out.lo.push_back(std::min(p, q));
    out.hi.push_back(std::max(p, q));
  }
  return out;
}

}  // namespace

int edge_crossings(const Tangle& x, const Edge& e) {
  if (!x.contains(e)) {
    throw Error(ErrorCode::kEdgeNotInTangle, "edge " + format_edge(e) + " not in tangle");
  }
  const std::vector<Edge> edges = x.edges();
  const ChordArrays c = chords_of(x.n(), edges);
  const int p = boundary_position(x.n(), e.a);
  const int q = boundary_position(x.n(), e.b);
  return kernels::active_kernels().count(c.lo, c.hi, std::min(p, q), std::max(p, q));
}

std::vector<int> crossing_counts(const Tangle& x) {
  const std::vector<Edge> edges = x.edges();
  const ChordArrays c = chords_of(x.n(), edges);
  std::vector<std::int32_t> counts(edges.size());
  kernels::crossing_table(c.lo, c.hi, counts);
  return {counts.begin(), counts.end()};
}

std::vector<std::pair<Edge, Edge>> crossing_pairs(const Tangle& x) {
  const std::vector<Edge> edges = x.edges();
  std::vector<std::pair<Edge, Edge>> out;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      if (edges_cross(x.n(), edges[i], edges[j])) out.emplace_back(edges[i], edges[j]);
    }
  }
  return out;
}

int total_crossings(const Tangle& x) {
  int sum = 0;
  for (const int c : crossing_counts(x)) sum += c;
  return sum / 2;
}

std::vector<Component> components(const Tangle& x) {
  const int n = x.n();
  std::vector<Component> out;
  int start = 1;
  int reach = 0;
  for (int c = 1; c <= n; ++c) {
    reach = std::max({reach, x.partner(top(c)).index, x.partner(bottom(c)).index});
    if (reach > c) continue;
    const int width = c - start + 1;
    std::vector<std::pair<NodeRef, NodeRef>> pairs;
    for (const Edge& e : x.edges()) {
      if (e.a.index >= start && e.a.index <= c) {
        pairs.emplace_back(NodeRef{e.a.row, e.a.index - start + 1},
                           NodeRef{e.b.row, e.b.index - start + 1});
      }
    }
    out.push_back({Tangle::from_pairs(width, pairs), start - 1});
    start = c + 1;
  }
  return out;
}

std::optional<std::pair<Edge, Edge>> merge_edges(const Edge& h, const Edge& e) {
  if (edge_kind(h) != EdgeKind::kUpperHook || h.b.index != h.a.index + 1 || e == h) {
    return std::nullopt;
  }
  const int i = h.a.index;
  const int x = e.a.index;
  const int y = e.b.index;
  switch (edge_kind(e)) {
    case EdgeKind::kUpperHook:
      if (x < i && i + 1 < y) return std::pair{Edge{top(x), top(i)}, Edge{top(i + 1), top(y)}};
      break;
    case EdgeKind::kLowerHook:
      if (x <= i && i + 1 <= y) {
        return std::pair{Edge{top(i), bottom(x)}, Edge{top(i + 1), bottom(y)}};
      }
      break;
    case EdgeKind::kNegativeTransversal:
      if (x < i && i + 1 <= y) {
        return std::pair{Edge{top(x), top(i)}, Edge{top(i + 1), bottom(y)}};
      }
      break;
    case EdgeKind::kPositiveTransversal:
      if (x > i + 1 && i >= y) {
        return std::pair{Edge{top(i), bottom(y)}, Edge{top(i + 1), top(x)}};
      }
      break;
    case EdgeKind::kZeroTransversal:
      break;
  }
  return std::nullopt;
}

Tangle merge(const Tangle& x, const Edge& h, const Edge& e) {
  if (edge_kind(h) != EdgeKind::kUpperHook || h.b.index != h.a.index + 1) {
    throw Error(ErrorCode::kNotASizeOneUpperHook,
                "edge " + format_edge(h) + " is not a size-one upper hook");
  }
  for (const Edge& f : {h, e}) {
    if (!x.contains(f)) {
      throw Error(ErrorCode::kEdgeNotInTangle, "edge " + format_edge(f) + " not in tangle");
    }
  }
  const auto merged = merge_edges(h, e);
  if (!merged) {
    throw Error(ErrorCode::kMergeUndefined,
                "cannot merge " + format_edge(h) + " with " + format_edge(e));
  }
  std::vector<std::uint16_t> links(x.links().begin(), x.links().end());
  for (const Edge& f : {merged->first, merged->second}) {
    const int a = x.node_id(f.a);
    const int b = x.node_id(f.b);
    links[a] = static_cast<std::uint16_t>(b);
    links[b] = static_cast<std::uint16_t>(a);
  }
  return Tangle::from_links(x.n(), std::move(links));
}

Tangle reflect(const Tangle& x, Axis axis) {
  const int n = x.n();
  auto map = [&](int id) {
    if (axis == Axis::kHorizontal) return id < n ? id + n : id - n;
    return id < n ? n - 1 - id : n + (2 * n - 1 - id);
  };
  std::vector<std::uint16_t> links(2 * static_cast<std::size_t>(n));
  for (int id = 0; id < 2 * n; ++id) {
    links[map(id)] = static_cast<std::uint16_t>(map(x.links()[id]));
  }
  return Tangle::from_links(n, std::move(links));
}

}  // namespace brauer
