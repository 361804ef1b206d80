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


// Deterministic SVG diagrams. Nodes sit on an integer grid; hooks are
// semicircular arcs, transversals are straight segments or cubic curves.
// A word is drawn as its prime diagrams stacked top to bottom, sharing node
// rows between neighbours.

#ifndef BRAUER_RENDER_HPP_
#define BRAUER_RENDER_HPP_

#include <string>

#include "brauer/tangle.hpp"

namespace brauer {

inline constexpr int kNodeSpacing = 40;
inline constexpr int kMargin = 40;

// Vertical distance between the two node rows of one diagram.
int row_gap(int n);

std::string render_svg(const Tangle& x);
std::string render_svg(const Word& w);

}  // namespace brauer

#endif  // BRAUER_RENDER_HPP_
