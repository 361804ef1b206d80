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

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "brauer/format.hpp"

namespace brauer {
namespace {

// Horizontal coordinates are doubled: node line j sits at 2j and the middle
// of column c at 2c+1.
bool passes_strictly(const Edge& e, int coord) {
  const int lo = std::min(e.a.index, e.b.index);
  const int hi = std::max(e.a.index, e.b.index);
  return 2 * lo < coord && coord < 2 * hi;
}

// Sort key for the top-to-bottom order along a vertical line. Only valid for
// the edges of a planar tangle that pass through the same line.
std::tuple<int, int> vertical_key(const Edge& e) {
  switch (edge_kind(e)) {
    case EdgeKind::kUpperHook:
      return {0, -e.a.index};
    case EdgeKind::kNegativeTransversal:
      return {1, -e.a.index};
    case EdgeKind::kPositiveTransversal:
      return {1, e.a.index};
    case EdgeKind::kZeroTransversal:
      return {1, 0};
    case EdgeKind::kLowerHook:
      return {2, e.a.index};
  }
  return {3, 0};
}

std::vector<Edge> edges_through(const std::vector<Edge>& edges, int coord) {
  std::vector<Edge> out;
  for (const Edge& e : edges) {
    if (passes_strictly(e, coord)) out.push_back(e);
  }
  std::sort(out.begin(), out.end(), [](const Edge& l, const Edge& r) {
    return vertical_key(l) < vertical_key(r);
  });
  return out;
}

void require_planar(const Tangle& x) {
  if (!is_planar(x)) {
    throw Error(ErrorCode::kNotPlanar, format_tangle(x) + " has crossings");
  }
}

// Regions (column, depth) on the two sides of node line j that share a
// stretch of that line.
std::vector<std::pair<int, int>> horizontal_neighbours(const Tangle& x,
                                                       const std::vector<Edge>& edges,
                                                       int j) {
  const Edge top_edge = x.edge_at(top(j));
  if (edge_kind(top_edge) == EdgeKind::kZeroTransversal) return {};
  const NodeRef other = top_edge.a == top(j) ? top_edge.b : top_edge.a;
  const int top_left = other.index < j ? 1 : 0;
  const int top_right = 1 - top_left;
  const std::size_t through = edges_through(edges, 2 * j).size();
  std::vector<std::pair<int, int>> out;
  for (int k = 0; k <= static_cast<int>(through); ++k) {
    out.emplace_back(top_left + k, top_right + k);
  }
  return out;
}

}  // namespace

bool is_planar(const Tangle& x) { return total_crossings(x) == 0; }

std::vector<Region> regions(const Tangle& x) {
  require_planar(x);
  const std::vector<Edge> edges = x.edges();
  std::vector<Region> out;
  for (int c = 1; c <= x.n() - 1; ++c) {
    const std::vector<Edge> through = edges_through(edges, 2 * c + 1);
    for (std::size_t d = 0; d <= through.size(); ++d) {
      Region r{c, static_cast<int>(d), std::nullopt, std::nullopt};
      if (d > 0) r.upper = through[d - 1];
      if (d < through.size()) r.lower = through[d];
      out.push_back(r);
    }
  }
  return out;
}

RegionDag region_dag(const Tangle& x) {
  const std::vector<Region> all = regions(x);
  const std::vector<Edge> edges = x.edges();
  const int n = x.n();

  std::map<std::pair<int, int>, int> vertex_of;  // (column, depth) -> vertex
  std::map<int, int> depth_limit;                // column -> deepest region
  RegionDag dag;
  for (const Region& r : all) {
    depth_limit[r.column] = std::max(depth_limit[r.column], r.depth);
    if (r.depth % 2 == 1) {
      vertex_of[{r.column, r.depth}] = static_cast<int>(dag.vertices.size());
      dag.vertices.push_back(r);
    }
  }

  // adjacent[(c, d)] lists regions of columns c-1 and c+1 sharing a boundary
  // stretch with (c, d).
  std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> adjacent;
  for (int j = 2; j <= n - 1; ++j) {
    for (const auto& [left, right] : horizontal_neighbours(x, edges, j)) {
      adjacent[{j - 1, left}].emplace_back(j, right);
      adjacent[{j, right}].emplace_back(j - 1, left);
    }
  }

  std::set<std::pair<int, int>> arcs;
  for (std::size_t v = 0; v < dag.vertices.size(); ++v) {
    const Region& r = dag.vertices[v];
    if (r.depth + 1 > depth_limit[r.column]) continue;
    const auto it = adjacent.find({r.column, r.depth + 1});
    if (it == adjacent.end()) continue;
    for (const auto& key : it->second) {
      const auto target = vertex_of.find(key);
      if (target != vertex_of.end()) arcs.emplace(static_cast<int>(v), target->second);
    }
  }
  dag.arcs.assign(arcs.begin(), arcs.end());
  return dag;
}

Word factorize_tl(const Tangle& x) {
  const RegionDag dag = region_dag(x);
  const std::size_t m = dag.vertices.size();
  std::vector<int> indegree(m, 0);
  std::vector<std::vector<int>> successors(m);
  for (const auto& [from, to] : dag.arcs) {
    ++indegree[static_cast<std::size_t>(to)];
    successors[static_cast<std::size_t>(from)].push_back(to);
  }
  std::vector<int> layer;
  for (std::size_t v = 0; v < m; ++v) {
    if (indegree[v] == 0) layer.push_back(static_cast<int>(v));
  }
  Word out{x.n(), {}};
  std::size_t emitted = 0;
  while (!layer.empty()) {
    // Vertices are stored by (column, depth), so index order is left to right.
    std::sort(layer.begin(), layer.end());
    std::vector<int> next;
    for (const int v : layer) {
      out.factors.push_back(u_prime(dag.vertices[static_cast<std::size_t>(v)].column));
      ++emitted;
      for (const int w : successors[static_cast<std::size_t>(v)]) {
        if (--indegree[static_cast<std::size_t>(w)] == 0) next.push_back(w);
      }
    }
    layer = std::move(next);
  }
  if (emitted != m) {
    throw Error(ErrorCode::kInternalError, "region graph of " + format_tangle(x) + " has a cycle");
  }
  return out;
}

}  // namespace brauer
