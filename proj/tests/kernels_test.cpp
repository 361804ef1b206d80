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


#include "brauer/kernels.hpp"

#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "brauer/tangle.hpp"
#include "test_util.hpp"

namespace brauer::kernels {
namespace {

struct Chords {
  std::vector<std::int32_t> lo, hi;
};

// Arbitrary integer endpoints, including values equal to the query ends.
Chords random_chords(std::size_t m, std::int32_t range, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int32_t> pick(-2, range + 2);
  Chords c;
  for (std::size_t k = 0; k < m; ++k) {
    std::int32_t a = pick(rng), b = pick(rng);
    if (a > b) std::swap(a, b);
    c.lo.push_back(a);
    c.hi.push_back(b);
  }
  return c;
}

std::vector<const KernelSet*> simd_variants() {
  std::vector<const KernelSet*> out;
  if (const KernelSet* k = avx2_kernels()) out.push_back(k);
  if (const KernelSet* k = neon_kernels()) out.push_back(k);
  return out;
}

TEST(Kernels, ScalarMatchesDefinition) {
  const std::vector<std::int32_t> lo{0, 1, 2, 5};
  const std::vector<std::int32_t> hi{3, 4, 6, 7};
  // Query (1,4): chord (0,3) has one end inside, (1,4) none, (2,6) one, (5,7) none.
  EXPECT_EQ(scalar_kernels().count(lo, hi, 1, 4), 2);
  std::vector<std::int32_t> counts(4, 10);
  EXPECT_EQ(scalar_kernels().accumulate(lo, hi, 1, 4, -1, counts), 2);
  EXPECT_EQ(counts, (std::vector<std::int32_t>{9, 10, 9, 10}));
}

TEST(Kernels, SimdMatchesScalarOnAllLengths) {
  const auto variants = simd_variants();
  if (variants.empty()) GTEST_SKIP() << "no SIMD variant on this machine";
  std::mt19937_64 rng(31);
  for (const KernelSet* k : variants) {
    // Every length 0..70 exercises each remainder of the vector width.
    for (std::size_t m = 0; m <= 70; ++m) {
      for (int trial = 0; trial < 40; ++trial) {
        const Chords c = random_chords(m, 20, rng);
        std::uniform_int_distribution<std::int32_t> pick(-2, 22);
        std::int32_t p = pick(rng), q = pick(rng);
        if (p > q) std::swap(p, q);
        ASSERT_EQ(k->count(c.lo, c.hi, p, q), scalar_kernels().count(c.lo, c.hi, p, q))
            << k->name << " m=" << m;
        std::vector<std::int32_t> a(m), b(m);
        for (std::size_t i = 0; i < m; ++i) a[i] = b[i] = static_cast<std::int32_t>(rng() % 50);
        const std::int32_t delta = (trial % 2) ? 1 : -1;
        ASSERT_EQ(k->accumulate(c.lo, c.hi, p, q, delta, a),
                  scalar_kernels().accumulate(c.lo, c.hi, p, q, delta, b));
        ASSERT_EQ(a, b) << k->name << " m=" << m;
      }
    }
  }
}

TEST(Kernels, SimdMatchesScalarOnLargeInputs) {
  const auto variants = simd_variants();
  if (variants.empty()) GTEST_SKIP() << "no SIMD variant on this machine";
  std::mt19937_64 rng(32);
  for (const KernelSet* k : variants) {
    for (std::size_t m : {257u, 1000u, 4099u}) {
      const Chords c = random_chords(m, 1 << 20, rng);
      for (int trial = 0; trial < 20; ++trial) {
        std::int32_t p = static_cast<std::int32_t>(rng() % (1 << 20));
        std::int32_t q = static_cast<std::int32_t>(rng() % (1 << 20));
        if (p > q) std::swap(p, q);
        ASSERT_EQ(k->count(c.lo, c.hi, p, q), scalar_kernels().count(c.lo, c.hi, p, q));
      }
    }
  }
}

TEST(Kernels, SelectionSwitchesAndResets) {
  ASSERT_TRUE(select_kernels(Isa::kScalar));
  EXPECT_EQ(active_kernels().name, "scalar");
  if (avx2_kernels()) {
    EXPECT_TRUE(select_kernels(Isa::kAvx2));
    EXPECT_EQ(active_kernels().name, "avx2");
  } else {
    EXPECT_FALSE(select_kernels(Isa::kAvx2));
  }
  reset_kernel_selection();
  const auto variants = simd_variants();
  EXPECT_EQ(active_kernels().name, variants.empty() ? "scalar" : variants.front()->name);
}

TEST(Kernels, CrossingCountsAgreeAcrossVariants) {
  std::mt19937_64 rng(33);
  std::vector<Isa> isas{Isa::kScalar, Isa::kAvx2, Isa::kNeon};
  for (int trial = 0; trial < 50; ++trial) {
    const Tangle x = testing::random_tangle(1 + static_cast<int>(rng() % 80), rng);
    ASSERT_TRUE(select_kernels(Isa::kScalar));
    const auto reference = crossing_counts(x);
    for (Isa isa : isas) {
      if (!select_kernels(isa)) continue;
      EXPECT_EQ(crossing_counts(x), reference);
    }
  }
  reset_kernel_selection();
}

TEST(Kernels, CrossingTableHelper) {
  const std::vector<std::int32_t> lo{0, 1, 2, 5};
  const std::vector<std::int32_t> hi{3, 4, 6, 7};
  std::vector<std::int32_t> counts(4);
  crossing_table(lo, hi, counts);
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(counts[i], scalar_kernels().count(lo, hi, lo[i], hi[i]));
  }
}

}  // namespace
}  // namespace brauer::kernels
