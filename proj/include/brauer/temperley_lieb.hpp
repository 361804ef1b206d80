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

// Planar (Temperley-Lieb) tangles and their region-DAG factorization.
//
// The vertical lines through (j, j') cut the diagram into N-1 columns. The
// edges passing through column c split it into stacked regions; a region's
// depth is the number of regions above it. Odd-depth regions ("1-regions")
// are the vertices of a DAG whose layers, read left to right, spell the
// minimal U-word.
//
// Everything is combinatorial: within a vertical line, upper hooks come first
// (inner hooks on top), then transversals, then lower hooks (outer hooks on
// top).

#ifndef BRAUER_TEMPERLEY_LIEB_HPP_
#define BRAUER_TEMPERLEY_LIEB_HPP_

#include <optional>
#include <utility>
#include <vector>

#include "brauer/tangle.hpp"

namespace brauer {

bool is_planar(const Tangle& x);

struct Region {
  int column = 1;
  int depth = 0;
  // Delimiting edges; nullopt means the frame.
  std::optional<Edge> upper;
  std::optional<Edge> lower;

  friend bool operator==(const Region&, const Region&) = default;
};

// All regions, column by column, top to bottom. Errors: kNotPlanar.
std::vector<Region> regions(const Tangle& x);

struct RegionDag {
  std::vector<Region> vertices;           // 1-regions, by (column, depth)
  std::vector<std::pair<int, int>> arcs;  // indices into vertices
};

// R1 -> R2 when the region right below R1 is horizontally adjacent to R2.
// Errors: kNotPlanar.
RegionDag region_dag(const Tangle& x);

// Errors: kNotPlanar.
Word factorize_tl(const Tangle& x);

}  // namespace brauer

#endif  // BRAUER_TEMPERLEY_LIEB_HPP_
