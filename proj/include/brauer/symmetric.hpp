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

// The symmetric group S_N inside B_N: tangles made only of transversals.

#ifndef BRAUER_SYMMETRIC_HPP_
#define BRAUER_SYMMETRIC_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "brauer/tangle.hpp"

namespace brauer {

// One-line notation: top node i is joined to bottom node image[i-1].
class Permutation {
 public:
  // Throws kIndexOutOfRange unless image is a bijection on 1..image.size().
  explicit Permutation(std::vector<int> image);

  int n() const noexcept { return static_cast<int>(image_.size()); }
  const std::vector<int>& image() const noexcept { return image_; }
  int operator[](int i) const { return image_[static_cast<std::size_t>(i - 1)]; }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> image_;
};

bool is_permutation_tangle(const Tangle& x);

// Errors: kNotAPermutationTangle.
Permutation to_permutation(const Tangle& x);
Tangle to_tangle(const Permutation& p);

// Quadratic pair scan.
long long inversion_count(const Permutation& p);

// Adjacent-swap sort. The outer pass runs j = N..1, the inner i = 1..j-1,
// and each swap of positions i, i+1 appends T_i, so the factor order is
// fixed. compose_word of the result is x. Errors: kNotAPermutationTangle.
Word bubble_sort_factorize(const Tangle& x);

// "4,3,1,2"
std::string format_permutation(const Permutation& p);
Permutation parse_permutation(std::string_view text);

}  // namespace brauer

#endif  // BRAUER_SYMMETRIC_HPP_
