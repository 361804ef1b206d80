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


// Acceptance gate: one PASS/FAIL line per criterion; exit status 1 if any
// criterion fails. Every tolerance is pinned below.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "brauer/factorizer.hpp"
#include "brauer/format.hpp"
#include "brauer/oracle.hpp"
#include "brauer/rewriter.hpp"
#include "brauer/symmetric.hpp"
#include "brauer/tau.hpp"
#include "brauer/temperley_lieb.hpp"
#include "test_util.hpp"

namespace brauer {
namespace {

// Wall-clock limits in seconds.
constexpr double kCardinalityLimit = 10.0;
constexpr double kLengthTableLimit = 30.0;
constexpr double kMaxMergesLimitN6 = 120.0;
constexpr double kMinimalityLimitN5 = 60.0;
constexpr double kMinimalityLimitN6 = 300.0;
// Largest admissible log-log runtime slope of factorize.
constexpr double kMaxSlope = 4.6;
// Minimum accumulated time per timing sample.
constexpr double kMinTiming = 0.05;
// Assumption-1 run parameters.
constexpr double kA1Scale = 2.0;
constexpr std::int64_t kA1Patience = 200000;
constexpr std::uint64_t kA1Seed = 20240601;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Check {
  bool ok = true;
  std::ostringstream detail;

  void require(bool condition, const std::string& what) {
    if (!condition) {
      if (!ok) detail << "; ";
      ok = false;
      detail << what;
    }
  }
};

int failures = 0;

void report(int id, const std::string& title, Check& check, const std::string& summary) {
  std::printf("%s criterion %d: %s (%s)\n", check.ok ? "PASS" : "FAIL", id, title.c_str(),
              check.ok ? summary.c_str() : check.detail.str().c_str());
  std::fflush(stdout);
  if (!check.ok) ++failures;
}

std::map<int, MinimalDatabase>& databases() {
  static std::map<int, MinimalDatabase> dbs;
  return dbs;
}

const MinimalDatabase& db(int n) {
  auto& dbs = databases();
  auto it = dbs.find(n);
  if (it == dbs.end()) it = dbs.emplace(n, bfs_cayley(n)).first;
  return it->second;
}

void criterion1() {
  Check c;
  const long long expected[] = {3, 15, 105, 945, 10395};
  const auto start = Clock::now();
  for (int n = 2; n <= 6; ++n) {
    const auto size = static_cast<long long>(bfs_cayley(n).size());
    c.require(size == expected[n - 2],
              "N=" + std::to_string(n) + " gave " + std::to_string(size));
  }
  const double t = seconds_since(start);
  c.require(t < kCardinalityLimit, "took " + std::to_string(t) + " s");
  report(1, "oracle cardinality |B_N| for N=2..6", c,
         "3 15 105 945 10395 in " + std::to_string(t) + " s");
}

void criterion2() {
  Check c;
  const std::map<int, std::vector<long long>> table{
      {1, {1}},
      {2, {1, 2}},
      {3, {1, 4, 8, 2}},
      {4, {1, 6, 20, 36, 30, 10, 2}},
      {5, {1, 8, 36, 102, 196, 228, 212, 106, 42, 12, 2}},
      {6, {1, 10, 56, 208, 562, 1110, 1650, 1966, 1914, 1440, 830, 414, 162, 56, 14, 2}}};
  const auto start = Clock::now();
  for (const auto& [n, row] : table) {
    const auto got = length_table(bfs_cayley(n));
    std::vector<long long> flat;
    for (const auto& [k, count] : got) {
      c.require(k == static_cast<int>(flat.size()), "gap in lengths at N=" + std::to_string(n));
      flat.push_back(count);
    }
    c.require(flat == row, "N=" + std::to_string(n) + " differs");
    c.require(got.rbegin()->first == n * (n - 1) / 2, "max length at N=" + std::to_string(n));
    if (n >= 3) c.require(got.rbegin()->second == 2, "max count at N=" + std::to_string(n));
  }
  const double t = seconds_since(start);
  c.require(t < kLengthTableLimit, "took " + std::to_string(t) + " s");
  report(2, "length spectrum T(N,k) for N=1..6", c,
         "exact match, T(4,3)=36 T(5,8)=42 T(6,10)=830, in " + std::to_string(t) + " s");
}

void criterion3() {
  Check c;
  const std::map<int, MaxMerges> expected{
      {2, {1, 1}}, {3, {1, 6}}, {4, {2, 2}}, {5, {2, 46}}, {6, {3, 18}}};
  double t6 = 0;
  std::ostringstream got;
  for (const auto& [n, want] : expected) {
    const MinimalDatabase& d = db(n);
    const auto start = Clock::now();
    const MaxMerges m = max_merges(d);
    if (n == 6) t6 = seconds_since(start);
    got << " (" << m.max_count << ',' << m.num_tangles << ')';
    c.require(m == want, "N=" + std::to_string(n) + " gave (" + std::to_string(m.max_count) +
                             "," + std::to_string(m.num_tangles) + ")");
    c.require(m.max_count == n / 2, "max != floor(N/2) at N=" + std::to_string(n));
  }
  c.require(t6 < kMaxMergesLimitN6, "N=6 took " + std::to_string(t6) + " s");
  report(3, "max merges for N=2..6", c, "got" + got.str());
}

void criterion4() {
  Check c;
  auto run = [&c](int n) {
    const MinimalDatabase& d = db(n);
    for (MinimalDatabase::Id id = 0; id < d.size(); ++id) {
      const Tangle x = d.tangle(id);
      try {
        const Word w = factorize(x);
        c.require(static_cast<int>(w.size()) == d.length(id), "not minimal: " + format_tangle(x));
        c.require(compose_word(w) == x, "does not compose: " + format_tangle(x));
      } catch (const Error& e) {
        c.require(false, std::string(error_name(e.code())) + " on " + format_tangle(x));
      }
      if (!c.ok) return;
    }
  };
  auto start = Clock::now();
  for (int n = 1; n <= 5; ++n) run(n);
  const double t5 = seconds_since(start);
  start = Clock::now();
  run(6);
  const double t6 = seconds_since(start);
  c.require(t5 < kMinimalityLimitN5, "N<=5 took " + std::to_string(t5) + " s");
  c.require(t6 < kMinimalityLimitN6, "N=6 took " + std::to_string(t6) + " s");
  report(4, "factorize is minimal and composes back, all of B_N for N<=6", c,
         "1069 tangles N<=5 in " + std::to_string(t5) + " s, 10395 at N=6 in " +
             std::to_string(t6) + " s");
}

void criterion5() {
  Check c;
  long long checked = 0;
  for (int n = 1; n <= 6; ++n) {
    const MinimalDatabase& d = db(n);
    for (MinimalDatabase::Id id = 0; id < d.size(); ++id) {
      const Tangle x = d.tangle(id);
      ++checked;
      c.require(length_p(x) == d.length(id) && length_tau(x) == d.length(id),
                "mismatch on " + format_tangle(x));
      if (!c.ok) break;
    }
  }
  report(5, "length_p = length_tau = oracle length for N<=6", c,
         std::to_string(checked) + " tangles");
}

void criterion6() {
  Check c;
  std::ostringstream got;
  for (int n = 1; n <= 6; ++n) {
    const Assumption2Report r = check_assumption2(db(n));
    got << " N=" << n << ':' << r.tested << '/' << r.counterexamples.size();
    c.require(r.counterexamples.empty(),
              std::to_string(r.counterexamples.size()) + " counterexamples at N=" +
                  std::to_string(n));
  }
  report(6, "Assumption 2: crossings equal T-primes of stored words, N<=6", c,
         "tested/counterexamples" + got.str());
}

void criterion7() {
  Check c;
  std::ostringstream got;
  const std::map<int, std::size_t> coverage{{3, 15}, {4, 105}};
  for (int n = 2; n <= 4; ++n) {
    Assumption1Options options;
    options.scale = kA1Scale;
    options.patience = kA1Patience;
    options.seed = kA1Seed;
    const Assumption1Report r = check_assumption1(db(n), options);
    got << " N=" << n << ": tested " << r.tangles_tested << ", counterexamples "
        << r.counterexamples.size() << ',';
    c.require(r.counterexamples.empty(), "counterexample at N=" + std::to_string(n));
    c.require(r.budget_exhausted == 0, "orbit cap hit at N=" + std::to_string(n));
    if (coverage.contains(n)) {
      c.require(r.tangles_tested == coverage.at(n),
                "coverage " + std::to_string(r.tangles_tested) + " at N=" + std::to_string(n));
    }
  }
  std::string summary = got.str();
  summary.pop_back();
  report(7, "Assumption 1: reduction reaches minimal length, N<=4, seed " +
                std::to_string(kA1Seed),
         c, summary.substr(1));
}

void criterion8() {
  Check c;
  long long perms = 0, planar = 0;
  for (int n = 1; n <= 5; ++n) {
    const MinimalDatabase& d = db(n);
    for (MinimalDatabase::Id id = 0; id < d.size(); ++id) {
      const Tangle x = d.tangle(id);
      if (is_permutation_tangle(x)) {
        ++perms;
        const Word w = bubble_sort_factorize(x);
        c.require(static_cast<long long>(w.size()) == inversion_count(to_permutation(x)) &&
                      static_cast<int>(w.size()) == d.length(id) && compose_word(w) == x,
                  "bubble sort on " + format_tangle(x));
      }
      if (is_planar(x)) {
        ++planar;
        const Word w = factorize_tl(x);
        c.require(static_cast<int>(w.size()) == d.length(id) && compose_word(w) == x,
                  "planar factorization on " + format_tangle(x));
      }
    }
  }
  const std::string planar_word = "U2 U5 U1 U3 U2 U4 U3";
  const std::string got = format_word(factorize_tl(compose_word(parse_word(planar_word, 6))));
  c.require(got == planar_word, "planar word " + got);
  report(8, "symmetric and planar submonoid algorithms, N<=5", c,
         std::to_string(perms) + " permutations, " + std::to_string(planar) +
             " planar tangles, planar word " + got + " reproduced");
}

void criterion9() {
  Check c;
  std::mt19937_64 rng(9);
  const std::vector<int> sizes{32, 64, 128};
  constexpr int kSamples = 5;
  std::vector<double> xs, ys;
  std::ostringstream got;
  for (int n : sizes) {
    std::vector<double> times;
    for (int s = 0; s < kSamples; ++s) {
      const Tangle x = testing::random_tangle(n, rng);
      if (n <= 64) {
        try {
          const Word w = factorize(x, {.debug_table = true});
          c.require(compose_word(w) == x, "debug run failed to compose at N=" + std::to_string(n));
        } catch (const Error& e) {
          c.require(false, std::string(error_name(e.code())) + " in debug mode at N=" +
                               std::to_string(n));
        }
      }
      // Repeat until kMinTiming seconds accumulate so short runs are measurable.
      Word w;
      int reps = 0;
      const auto start = Clock::now();
      do {
        w = factorize(x);
        ++reps;
      } while (seconds_since(start) < kMinTiming);
      times.push_back(seconds_since(start) / reps);
      c.require(static_cast<int>(w.size()) == length_p(x), "length at N=" + std::to_string(n));
    }
    std::sort(times.begin(), times.end());
    const double median = times[kSamples / 2];
    got << " N=" << n << ':' << median << 's';
    xs.push_back(std::log(static_cast<double>(n)));
    ys.push_back(std::log(median));
  }
  const double mx = (xs[0] + xs[1] + xs[2]) / 3, my = (ys[0] + ys[1] + ys[2]) / 3;
  double sxy = 0, sxx = 0;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    sxy += (xs[k] - mx) * (ys[k] - my);
    sxx += (xs[k] - mx) * (xs[k] - mx);
  }
  const double slope = sxy / sxx;
  c.require(slope <= kMaxSlope, "slope " + std::to_string(slope));
  got << " slope=" << slope;
  report(9, "factorize runtime slope <= 4.6 on N=32,64,128; debug checks N<=64", c,
         got.str().substr(1));
}

void criterion10() {
  Check c;
  const std::string sample = format_word(factorize(testing::t1u2_tangle()));
  c.require(sample == "T1 U2", "T1 U2 sample gave " + sample);
  const Tangle x4 = testing::length5_tangle();
  const std::vector<int> counts{edge_crossings(x4, {top(1), top(3)}),
                                edge_crossings(x4, {top(2), bottom(3)}),
                                edge_crossings(x4, {top(4), bottom(1)}),
                                edge_crossings(x4, {bottom(2), bottom(4)})};
  c.require(counts == std::vector<int>{1, 3, 1, 1}, "per-edge crossing counts differ");
  const Tangle x9 = compose_word(parse_word("T1 U2 U3 T1 T2", 4));
  const Word w9 = factorize(x9, {.debug_table = true});
  c.require(format_word(w9) == "T1 U2 U3 T1 T2" && compose_word(w9) == x9 && w9.size() == 5,
            "end-to-end factorization gave " + format_word(w9));
  report(10, "golden anchors", c,
         "T1 U2; crossings 1,3,1,1; " + format_word(w9));
}

}  // namespace
}  // namespace brauer

int main() {
  const std::vector<std::function<void()>> criteria{
      brauer::criterion1, brauer::criterion2, brauer::criterion3, brauer::criterion4,
      brauer::criterion5, brauer::criterion6, brauer::criterion7, brauer::criterion8,
      brauer::criterion9, brauer::criterion10};
  for (const auto& run : criteria) {
    try {
      run();
    } catch (const std::exception& e) {
      std::printf("FAIL criterion: unexpected exception %s\n", e.what());
      ++brauer::failures;
    }
  }
  std::printf("%d of %zu criteria failed\n", brauer::failures, criteria.size());
  return brauer::failures == 0 ? 0 : 1;
}
