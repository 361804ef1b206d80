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

// Internal declarations of the per-ISA kernel implementations. Each variant
// lives in its own translation unit so it can be built with its own target
// flags; only dispatch.cpp decides which one runs.

#ifndef BRAUER_SRC_KERNELS_VARIANTS_HPP_
#define BRAUER_SRC_KERNELS_VARIANTS_HPP_

#include <cstdint>
#include <span>

namespace brauer::kernels {

namespace scalar {
int count(std::span<const std::int32_t> lo, std::span<const std::int32_t> hi,
          std::int32_t p, std::int32_t q);
int accumulate(std::span<const std::int32_t> lo,
               std::span<const std::int32_t> hi, std::int32_t p,
               std::int32_t q, std::int32_t delta,
               std::span<std::int32_t> counts);
}  // namespace scalar

#if defined(BRAUER_HAVE_AVX2)
namespace avx2 {
int count(std::span<const std::int32_t> lo, std::span<const std::int32_t> hi,
          std::int32_t p, std::int32_t q);
int accumulate(std::span<const std::int32_t> lo,
               std::span<const std::int32_t> hi, std::int32_t p,
               std::int32_t q, std::int32_t delta,
               std::span<std::int32_t> counts);
}  // namespace avx2
#endif

#if defined(BRAUER_HAVE_NEON)
namespace neon {
int count(std::span<const std::int32_t> lo, std::span<const std::int32_t> hi,
          std::int32_t p, std::int32_t q);
int accumulate(std::span<const std::int32_t> lo,
               std::span<const std::int32_t> hi, std::int32_t p,
               std::int32_t q, std::int32_t delta,
               std::span<std::int32_t> counts);
}  // namespace neon
#endif

}  // namespace brauer::kernels

#endif  // BRAUER_SRC_KERNELS_VARIANTS_HPP_
