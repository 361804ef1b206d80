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

#include "kernels/variants.hpp"

namespace brauer::kernels::scalar {

int count(std::span<const std::int32_t> lo, std::span<const std::int32_t> hi,
          std::int32_t p, std::int32_t q) {
  int total = 0;
  for (std::size_t k = 0; k < lo.size(); ++k) {
    const bool lo_inside = p < lo[k] && lo[k] < q;
    const bool hi_inside = p < hi[k] && hi[k] < q;
    total += lo_inside != hi_inside;
  }
  return total;
}

int accumulate(std::span<const std::int32_t> lo,
               std::span<const std::int32_t> hi, std::int32_t p,
               std::int32_t q, std::int32_t delta,
               std::span<std::int32_t> counts) {
  int total = 0;
  for (std::size_t k = 0; k < lo.size(); ++k) {
    const bool lo_inside = p < lo[k] && lo[k] < q;
    const bool hi_inside = p < hi[k] && hi[k] < q;
    if (lo_inside != hi_inside) {
      counts[k] += delta;
      ++total;
    }
  }
  return total;
}

}  // namespace brauer::kernels::scalar
