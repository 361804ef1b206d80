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

#include <atomic>

#include "brauer/kernels.hpp"
#include "kernels/variants.hpp"

namespace brauer::kernels {
namespace {

constexpr KernelSet kScalar{"scalar", &scalar::count, &scalar::accumulate};

#if defined(BRAUER_HAVE_AVX2)
constexpr KernelSet kAvx2{"avx2", &avx2::count, &avx2::accumulate};
#endif

#if defined(BRAUER_HAVE_NEON)
constexpr KernelSet kNeon{"neon", &neon::count, &neon::accumulate};
#endif

const KernelSet& detect() {
  if (const KernelSet* k = avx2_kernels()) return *k;
  if (const KernelSet* k = neon_kernels()) return *k;
  return kScalar;
}

std::atomic<const KernelSet*>& selection() {
  static std::atomic<const KernelSet*> current{&detect()};
  return current;
}

}  // namespace

const KernelSet& scalar_kernels() { return kScalar; }

const KernelSet* avx2_kernels() {
#if defined(BRAUER_HAVE_AVX2)
  static const bool supported = __builtin_cpu_supports("avx2");
  return supported ? &kAvx2 : nullptr;
#else
  return nullptr;
#endif
}

const KernelSet* neon_kernels() {
#if defined(BRAUER_HAVE_NEON)
  return &kNeon;
#else
  return nullptr;
#endif
}

const KernelSet& active_kernels() {
  return *selection().load(std::memory_order_relaxed);
}

bool select_kernels(Isa isa) {
  const KernelSet* chosen = nullptr;
  switch (isa) {
    case Isa::kScalar:
      chosen = &kScalar;
      break;
    case Isa::kAvx2:
      chosen = avx2_kernels();
      break;
    case Isa::kNeon:
      chosen = neon_kernels();
      break;
  }
  if (chosen == nullptr) return false;
  selection().store(chosen, std::memory_order_relaxed);
  return true;
}

void reset_kernel_selection() {
  selection().store(&detect(), std::memory_order_relaxed);
}

void crossing_table(std::span<const std::int32_t> lo,
                    std::span<const std::int32_t> hi,
                    std::span<std::int32_t> counts) {
  const KernelSet& k = active_kernels();
  for (std::size_t i = 0; i < lo.size(); ++i) {
    counts[i] = k.count(lo, hi, lo[i], hi[i]);
  }
}

}  // namespace brauer::kernels
