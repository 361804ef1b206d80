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

// Text formats.
//
//   tangle:  B3: (1,3) (2,1') (2',3')
//   word:    T1 U2 U3 T1 T2          (topmost factor first)
//
// Parsing accepts arbitrary whitespace between edges and tokens (including
// none between edges); emission is canonical: edges sorted, one space apart.
// Parse failures throw Error(kParseError); structural problems keep their own
// codes (kDuplicateNode, ...).

#ifndef BRAUER_FORMAT_HPP_
#define BRAUER_FORMAT_HPP_

#include <string>
#include <string_view>

#include "brauer/tangle.hpp"

namespace brauer {

std::string format_node(NodeRef v);
std::string format_edge(const Edge& e);
std::string format_prime(Prime p);
std::string format_tangle(const Tangle& x);
std::string format_word(const Word& w);

Tangle parse_tangle(std::string_view text);

// `n` is the monoid the word lives in; pass n < 0 to infer it as one more
// than the largest index (at least 1).
Word parse_word(std::string_view text, int n = -1);

}  // namespace brauer

#endif  // BRAUER_FORMAT_HPP_
