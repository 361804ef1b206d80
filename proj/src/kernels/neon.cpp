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

// NEON is mandatory on AArch64, so this variant needs no runtime check.

#include <arm_neon.h>

#include "kernels/variants.hpp"

namespace brauer::kernels::neon {
namespace {

constexpr std::size_t kLanes = 4;

inline uint32x4_t crossing_mask(int32x4_t lo, int32x4_t hi, int32x4_t p,
                                int32x4_t q) {
  const uint32x4_t lo_inside = vandq_u32(vcgtq_s32(lo, p), vcltq_s32(lo, q));
  const uint32x4_t hi_inside = vandq_u32(vcgtq_s32(hi, p), vcltq_s32(hi, q));
  return veorq_u32(lo_inside, hi_inside);
}

inline bool scalar_crosses(std::int32_t lo, std::int32_t hi, std::int32_t p,
                           std::int32_t q) {
  return (p < lo && lo < q) != (p < hi && hi < q);
}

}  // namespace

int count(std::span<const std::int32_t> lo, std::span<const std::int32_t> hi,
          std::int32_t p, std::int32_t q) {
  const std::size_t m = lo.size();
  const std::size_t body = m - m % kLanes;
  const int32x4_t vp = vdupq_n_s32(p);
  const int32x4_t vq = vdupq_n_s32(q);
  uint32x4_t acc = vdupq_n_u32(0);
  for (std::size_t k = 0; k < body; k += kLanes) {
    const uint32x4_t mask =
        crossing_mask(vld1q_s32(lo.data() + k), vld1q_s32(hi.data() + k), vp, vq);
    acc = vsubq_u32(acc, mask);
  }
  int total = static_cast<int>(vaddvq_u32(acc));
  for (std::size_t k = body; k < m; ++k) {
    total += scalar_crosses(lo[k], hi[k], p, q);
  }
  return total;
}

int accumulate(std::span<const std::int32_t> lo,
               std::span<const std::int32_t> hi, std::int32_t p,
               std::int32_t q, std::int32_t delta,
               std::span<std::int32_t> counts) {
  const std::size_t m = lo.size();
  const std::size_t body = m - m % kLanes;
  const int32x4_t vp = vdupq_n_s32(p);
  const int32x4_t vq = vdupq_n_s32(q);
  const int32x4_t vdelta = vdupq_n_s32(delta);
  uint32x4_t acc = vdupq_n_u32(0);
  for (std::size_t k = 0; k < body; k += kLanes) {
    const uint32x4_t mask =
        crossing_mask(vld1q_s32(lo.data() + k), vld1q_s32(hi.data() + k), vp, vq);
    const int32x4_t add =
        vandq_s32(vreinterpretq_s32_u32(mask), vdelta);
    vst1q_s32(counts.data() + k, vaddq_s32(vld1q_s32(counts.data() + k), add));
    acc = vsubq_u32(acc, mask);
  }
  int total = static_cast<int>(vaddvq_u32(acc));
  for (std::size_t k = body; k < m; ++k) {
    if (scalar_crosses(lo[k], hi[k], p, q)) {
      counts[k] += delta;
      ++total;
    }
  }
  return total;
}

}  // namespace brauer::kernels::neon
