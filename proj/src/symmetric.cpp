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

#include "brauer/symmetric.hpp"

#include <charconv>
#include <utility>

#include "brauer/format.hpp"

namespace brauer {

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  std::vector<bool> seen(image_.size() + 1, false);
  for (const int v : image_) {
    if (v < 1 || v > n() || seen[static_cast<std::size_t>(v)]) {
      throw Error(ErrorCode::kIndexOutOfRange,
                  "not a permutation of 1.." + std::to_string(n()));
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

bool is_permutation_tangle(const Tangle& x) {
  const int n = x.n();
  for (int id = 0; id < n; ++id) {
    if (x.links()[id] < n) return false;
  }
  return true;
}

Permutation to_permutation(const Tangle& x) {
  if (!is_permutation_tangle(x)) {
    throw Error(ErrorCode::kNotAPermutationTangle,
                format_tangle(x) + " contains a hook");
  }
  std::vector<int> image;
  image.reserve(static_cast<std::size_t>(x.n()));
  for (int i = 1; i <= x.n(); ++i) image.push_back(x.partner(top(i)).index);
  return Permutation(std::move(image));
}

Tangle to_tangle(const Permutation& p) {
  std::vector<std::pair<NodeRef, NodeRef>> pairs;
  for (int i = 1; i <= p.n(); ++i) pairs.emplace_back(top(i), bottom(p[i]));
  return Tangle::from_pairs(p.n(), pairs);
}

long long inversion_count(const Permutation& p) {
  long long count = 0;
  const auto& s = p.image();
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) count += s[i] > s[j];
  }
  return count;
}

Word bubble_sort_factorize(const Tangle& x) {
  std::vector<int> s = to_permutation(x).image();
  Word w{x.n(), {}};
  const int n = x.n();
  for (int j = n; j >= 1; --j) {
    for (int i = 1; i <= j - 1; ++i) {
      auto& left = s[static_cast<std::size_t>(i - 1)];
      auto& right = s[static_cast<std::size_t>(i)];
      if (left > right) {
        std::swap(left, right);
        w.factors.push_back(t_prime(i));
      }
    }
  }
  return w;
}

std::string format_permutation(const Permutation& p) {
  std::string out;
  for (const int v : p.image()) {
    if (!out.empty()) out += ',';
    out += std::to_string(v);
  }
  return out;
}

Permutation parse_permutation(std::string_view text) {
  std::vector<int> image;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == ',')) ++pos;
    if (pos >= text.size()) break;
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc()) {
      throw Error(ErrorCode::kParseError, "bad permutation \"" + std::string(text) + "\"");
    }
    image.push_back(value);
    pos = static_cast<std::size_t>(ptr - text.data());
  }
  return Permutation(std::move(image));
}

}  // namespace brauer
