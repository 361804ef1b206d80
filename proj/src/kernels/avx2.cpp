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

// Built with -mavx2. Nothing here may run unless dispatch.cpp has checked
// the CPU first.

#include <immintrin.h>

#include "kernels/variants.hpp"

namespace brauer::kernels::avx2 {
namespace {

constexpr std::size_t kLanes = 8;

// All-ones lanes where chord (lo, hi) crosses (p, q).
inline __m256i crossing_mask(__m256i lo, __m256i hi, __m256i p, __m256i q) {
  const __m256i lo_inside =
      _mm256_and_si256(_mm256_cmpgt_epi32(lo, p), _mm256_cmpgt_epi32(q, lo));
  const __m256i hi_inside =
      _mm256_and_si256(_mm256_cmpgt_epi32(hi, p), _mm256_cmpgt_epi32(q, hi));
  return _mm256_xor_si256(lo_inside, hi_inside);
}

inline int horizontal_sum(__m256i v) {
  const __m128i sum128 = _mm_add_epi32(_mm256_castsi256_si128(v),
                                       _mm256_extracti128_si256(v, 1));
  const __m128i sum64 = _mm_add_epi32(sum128, _mm_unpackhi_epi64(sum128, sum128));
  const __m128i sum32 = _mm_add_epi32(sum64, _mm_shuffle_epi32(sum64, 0b01));
  return _mm_cvtsi128_si32(sum32);
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
  const __m256i vp = _mm256_set1_epi32(p);
  const __m256i vq = _mm256_set1_epi32(q);
  __m256i acc = _mm256_setzero_si256();
  for (std::size_t k = 0; k < body; k += kLanes) {
    const __m256i l =
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(lo.data() + k));
    const __m256i h =
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(hi.data() + k));
    // Mask lanes are -1, so subtracting counts them.
    acc = _mm256_sub_epi32(acc, crossing_mask(l, h, vp, vq));
  }
  int total = horizontal_sum(acc);
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
  const __m256i vp = _mm256_set1_epi32(p);
  const __m256i vq = _mm256_set1_epi32(q);
  const __m256i vdelta = _mm256_set1_epi32(delta);
  __m256i acc = _mm256_setzero_si256();
  for (std::size_t k = 0; k < body; k += kLanes) {
    const __m256i l =
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(lo.data() + k));
    const __m256i h =
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(hi.data() + k));
    const __m256i mask = crossing_mask(l, h, vp, vq);
    auto* out = reinterpret_cast<__m256i*>(counts.data() + k);
    const __m256i c = _mm256_loadu_si256(out);
    _mm256_storeu_si256(out, _mm256_add_epi32(c, _mm256_and_si256(mask, vdelta)));
    acc = _mm256_sub_epi32(acc, mask);
  }
  int total = horizontal_sum(acc);
  for (std::size_t k = body; k < m; ++k) {
    if (scalar_crosses(lo[k], hi[k], p, q)) {
      counts[k] += delta;
      ++total;
    }
  }
  return total;
}

}  // namespace brauer::kernels::avx2
