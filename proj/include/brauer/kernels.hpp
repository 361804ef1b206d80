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

// Chord-interleaving kernels.
//
// Edges are given in structure-of-arrays form: chord k joins boundary
// positions lo[k] < hi[k]. A query chord (p, q) with p < q crosses chord k iff
// exactly one of lo[k], hi[k] lies strictly between p and q. Chords sharing an
// endpoint with the query never count, so a chord never crosses itself.
//
// The scalar variant is the reference; SIMD variants must agree with it
// bit-for-bit on every input.

#ifndef BRAUER_KERNELS_HPP_
#define BRAUER_KERNELS_HPP_

#include <cstdint>
#include <span>
#include <string_view>

namespace brauer::kernels {

using CountFn = int (*)(std::span<const std::int32_t> lo,
                        std::span<const std::int32_t> hi, std::int32_t p,
                        std::int32_t q);

// Adds `delta` to counts[k] for every chord k crossing (p, q) and returns the
// number of such chords.
using AccumulateFn = int (*)(std::span<const std::int32_t> lo,
                             std::span<const std::int32_t> hi, std::int32_t p,
                             std::int32_t q, std::int32_t delta,
                             std::span<std::int32_t> counts);

struct KernelSet {
  std::string_view name;
  CountFn count;
  AccumulateFn accumulate;
};

enum class Isa { kScalar, kAvx2, kNeon };

const KernelSet& scalar_kernels();

// nullptr if the variant was not compiled in or the CPU lacks support.
const KernelSet* avx2_kernels();
const KernelSet* neon_kernels();

// The best available set, detected once at first use unless overridden.
const KernelSet& active_kernels();

// Forces a specific variant. Returns false (and leaves the selection alone)
// when it is unavailable.
bool select_kernels(Isa isa);
void reset_kernel_selection();

// counts[k] = number of chords crossing chord k.
void crossing_table(std::span<const std::int32_t> lo,
                    std::span<const std::int32_t> hi,
                    std::span<std::int32_t> counts);

}  // namespace brauer::kernels

#endif  // BRAUER_KERNELS_HPP_
