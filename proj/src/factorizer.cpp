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

#include "brauer/factorizer.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <string>
#include <utility>

#include "brauer/format.hpp"
#include "brauer/kernels.hpp"
#include "brauer/symmetric.hpp"
#include "brauer/tau.hpp"

namespace brauer {
namespace {

int half_or_throw(long long sum, const char* what) {
  if (sum % 2 != 0) {
    throw Error(ErrorCode::kInternalError, std::string("odd ") + what + " sum");
  }
  return static_cast<int>(sum / 2);
}

}  // namespace

CrossingTable::CrossingTable(const Tangle& x) : n_(x.n()) {
  const std::size_t positions = 2 * static_cast<std::size_t>(n_);
  link_.assign(positions, 0);
  slot_of_.assign(positions, 0);
  const std::vector<Edge> edges = x.edges();
  lo_.resize(edges.size());
  hi_.resize(edges.size());
  size_.resize(edges.size());
  for (std::size_t s = 0; s < edges.size(); ++s) {
    const int p = boundary_position(n_, edges[s].a);
    const int q = boundary_position(n_, edges[s].b);
    set_slot(lo_, hi_, static_cast<int>(s), p, q);
    size_[s] = edge_size(edges[s]);
    link_[p] = q;
    link_[q] = p;
    slot_of_[p] = slot_of_[q] = static_cast<std::int32_t>(s);
  }
  count_.resize(edges.size());
  kernels::crossing_table(lo_, hi_, count_);
}

void CrossingTable::set_slot(std::vector<std::int32_t>& lo, std::vector<std::int32_t>& hi,
                             int slot, std::int32_t p, std::int32_t q) const {
  lo[static_cast<std::size_t>(slot)] = std::min(p, q);
  hi[static_cast<std::size_t>(slot)] = std::max(p, q);
}

int CrossingTable::slot_size(std::int32_t lo, std::int32_t hi) const {
  return std::abs(boundary_node(n_, lo).index - boundary_node(n_, hi).index);
}

Edge CrossingTable::slot_edge(int slot) const {
  const auto s = static_cast<std::size_t>(slot);
  return make_edge(boundary_node(n_, lo_[s]), boundary_node(n_, hi_[s]));
}

Tangle CrossingTable::tangle() const {
  std::vector<std::pair<NodeRef, NodeRef>> pairs;
  for (std::size_t s = 0; s < lo_.size(); ++s) {
    pairs.emplace_back(boundary_node(n_, lo_[s]), boundary_node(n_, hi_[s]));
  }
  return Tangle::from_pairs(n_, pairs);
}

std::vector<Edge> CrossingTable::edges() const {
  std::vector<Edge> out;
  out.reserve(lo_.size());
  auto visit = [&](NodeRef v) {
    const NodeRef w = boundary_node(n_, link_[static_cast<std::size_t>(boundary_position(n_, v))]);
    const Edge e = make_edge(v, w);
    if (e.a == v) out.push_back(e);
  };
  for (int i = 1; i <= n_; ++i) visit(top(i));
  for (int i = 1; i <= n_; ++i) visit(bottom(i));
  return out;
}

int CrossingTable::count(const Edge& e) const {
  const auto in_range = [this](NodeRef v) { return v.index >= 1 && v.index <= n_; };
  if (in_range(e.a) && in_range(e.b)) {
    const int p = boundary_position(n_, e.a);
    const int q = boundary_position(n_, e.b);
    if (link_[static_cast<std::size_t>(p)] == q) {
      return count_[static_cast<std::size_t>(slot_of_[static_cast<std::size_t>(p)])];
    }
  }
  throw Error(ErrorCode::kEdgeNotInTangle, "edge " + format_edge(e) + " not in tangle");
}

int CrossingTable::length_p() const {
  long long sum = 0;
  for (std::size_t s = 0; s < count_.size(); ++s) sum += std::max(count_[s], size_[s]);
  return half_or_throw(sum, "pass-count");
}

int CrossingTable::total_crossings() const {
  long long sum = 0;
  for (const std::int32_t c : count_) sum += c;
  return half_or_throw(sum, "crossing");
}

bool CrossingTable::has_upper_hook(int i) const {
  return i >= 1 && i <= n_ - 1 && link_[static_cast<std::size_t>(i - 1)] == i;
}

void CrossingTable::compose_t(int i) {
  if (i < 1 || i > n_ - 1) {
    throw Error(ErrorCode::kIndexOutOfRange, "T" + std::to_string(i) + " invalid");
  }
  const std::size_t p = static_cast<std::size_t>(i - 1);
  const std::size_t q = static_cast<std::size_t>(i);
  const int s1 = slot_of_[p];
  const int s2 = slot_of_[q];
  if (s1 == s2) {
    throw Error(ErrorCode::kInternalError,
                "T" + std::to_string(i) + " applied over the hook (" + std::to_string(i) +
                    "," + std::to_string(i + 1) + ")");
  }
  const bool crossed = kernels::scalar_kernels().count(
                           std::span(lo_).subspan(static_cast<std::size_t>(s2), 1),
                           std::span(hi_).subspan(static_cast<std::size_t>(s2), 1),
                           lo_[static_cast<std::size_t>(s1)],
                           hi_[static_cast<std::size_t>(s1)]) == 1;
  const std::int32_t a = link_[p];
  const std::int32_t b = link_[q];
  // Top node i+1 takes over a, top node i takes over b.
  link_[q] = a;
  link_[static_cast<std::size_t>(a)] = static_cast<std::int32_t>(q);
  link_[p] = b;
  link_[static_cast<std::size_t>(b)] = static_cast<std::int32_t>(p);
  set_slot(lo_, hi_, s1, static_cast<std::int32_t>(q), a);
  set_slot(lo_, hi_, s2, static_cast<std::int32_t>(p), b);
  slot_of_[q] = s1;
  slot_of_[p] = s2;
  for (const int s : {s1, s2}) {
    const auto k = static_cast<std::size_t>(s);
    size_[k] = slot_size(lo_[k], hi_[k]);
    count_[k] += crossed ? -1 : 1;
  }
  trial_.staged = false;
}

std::optional<CrossingTable::MergeOutcome> CrossingTable::trial_merge(int i,
                                                                      const Edge& e) {
  trial_.staged = false;
  if (!has_upper_hook(i)) {
    throw Error(ErrorCode::kNotASizeOneUpperHook,
                "(" + std::to_string(i) + "," + std::to_string(i + 1) + ") is not an edge");
  }
  const Edge h{top(i), top(i + 1)};
  count(e);  // throws kEdgeNotInTangle
  const auto merged = merge_edges(h, e);
  if (!merged) return std::nullopt;

  const int hook_slot = slot_of_[static_cast<std::size_t>(i - 1)];
  const int edge_slot = slot_of_[static_cast<std::size_t>(boundary_position(n_, e.a))];
  const auto sh = static_cast<std::size_t>(hook_slot);
  const auto se = static_cast<std::size_t>(edge_slot);
  const kernels::KernelSet& k = kernels::active_kernels();

  trial_.lo = lo_;
  trial_.hi = hi_;
  trial_.count = count_;
  // Nothing crosses a size-one hook, so only e's crossings disappear.
  k.accumulate(lo_, hi_, lo_[se], hi_[se], -1, trial_.count);

  const auto [e1, e2] = *merged;
  set_slot(trial_.lo, trial_.hi, hook_slot, boundary_position(n_, e1.a),
           boundary_position(n_, e1.b));
  set_slot(trial_.lo, trial_.hi, edge_slot, boundary_position(n_, e2.a),
           boundary_position(n_, e2.b));
  trial_.count[sh] =
      k.accumulate(trial_.lo, trial_.hi, trial_.lo[sh], trial_.hi[sh], +1, trial_.count);
  trial_.count[se] =
      k.accumulate(trial_.lo, trial_.hi, trial_.lo[se], trial_.hi[se], +1, trial_.count);

  long long pass_sum = 0;
  long long crossing_sum = 0;
  for (std::size_t s = 0; s < trial_.count.size(); ++s) {
    int size = size_[s];
    if (s == sh || s == se) size = slot_size(trial_.lo[s], trial_.hi[s]);
    pass_sum += std::max(trial_.count[s], size);
    crossing_sum += trial_.count[s];
  }
  trial_.staged = true;
  trial_.hook_slot = hook_slot;
  trial_.edge_slot = edge_slot;
  return MergeOutcome{half_or_throw(pass_sum, "pass-count"),
                      half_or_throw(crossing_sum, "crossing")};
}

void CrossingTable::commit_trial() {
  if (!trial_.staged) {
    throw Error(ErrorCode::kInternalError, "no staged merge to commit");
  }
  std::swap(lo_, trial_.lo);
  std::swap(hi_, trial_.hi);
  std::swap(count_, trial_.count);
  for (const int slot : {trial_.hook_slot, trial_.edge_slot}) {
    const auto s = static_cast<std::size_t>(slot);
    size_[s] = slot_size(lo_[s], hi_[s]);
    link_[static_cast<std::size_t>(lo_[s])] = hi_[s];
    link_[static_cast<std::size_t>(hi_[s])] = lo_[s];
    slot_of_[static_cast<std::size_t>(lo_[s])] = slot;
    slot_of_[static_cast<std::size_t>(hi_[s])] = slot;
  }
  trial_.staged = false;
}

bool CrossingTable::matches_recompute() const {
  const kernels::KernelSet& reference = kernels::scalar_kernels();
  for (std::size_t s = 0; s < lo_.size(); ++s) {
    if (link_[static_cast<std::size_t>(lo_[s])] != hi_[s] ||
        slot_of_[static_cast<std::size_t>(lo_[s])] != static_cast<std::int32_t>(s) ||
        size_[s] != slot_size(lo_[s], hi_[s])) {
      return false;
    }
    if (reference.count(lo_, hi_, lo_[s], hi_[s]) != count_[s]) return false;
  }
  return true;
}

namespace {

std::string dump_state(const CrossingTable& table, const Word& emitted,
                       const std::vector<Prime>& indices) {
  std::ostringstream out;
  out << "working tangle " << format_tangle(table.tangle()) << "; crossings";
  for (const Edge& e : table.edges()) out << ' ' << format_edge(e) << '=' << table.count(e);
  out << "; emitted \"" << format_word(emitted) << "\"; index trail";
  for (const Prime& p : indices) out << ' ' << p.index;
  return out.str();
}

}  // namespace

Word factorize(const Tangle& x, const FactorizeOptions& options) {
  const int n = x.n();
  CrossingTable table(x);
  const Word indices = bubble_sort_factorize(tau(x));
  Word out{n, {}};
  out.factors.reserve(indices.size());

  for (const Prime& step : indices.factors) {
    const int i = step.index;
    const int before = options.debug_table ? table.length_p() : 0;
    if (table.has_upper_hook(i)) {
      const int target = table.length_p() - 1;
      const Edge h{top(i), top(i + 1)};
      std::optional<Edge> chosen;
      int best_crossings = 0;
      for (const Edge& e : table.edges()) {
        if (e == h || table.count(e) >= edge_size(e)) continue;
        const auto outcome = table.trial_merge(i, e);
        if (!outcome || outcome->length_p != target) continue;
        if (!options.min_t) {
          chosen = e;
          break;
        }
        if (!chosen || outcome->total_crossings < best_crossings) {
          chosen = e;
          best_crossings = outcome->total_crossings;
        }
      }
      if (!chosen) {
        throw Error(ErrorCode::kNoViableMerge,
                    "no merge for (" + std::to_string(i) + "," + std::to_string(i + 1) +
                        ") lowers l_P: " + dump_state(table, out, indices.factors));
      }
      // Without min_t the loop broke right after staging the chosen merge.
      if (options.min_t) table.trial_merge(i, *chosen);
      table.commit_trial();
      out.factors.push_back(u_prime(i));
    } else {
      table.compose_t(i);
      out.factors.push_back(t_prime(i));
    }
    if (options.debug_table) {
      if (!table.matches_recompute()) {
        throw Error(ErrorCode::kInternalError,
                    "incremental crossing table diverged: " +
                        dump_state(table, out, indices.factors));
      }
      if (table.length_p() != before - 1) {
        throw Error(ErrorCode::kInternalError,
                    "step did not lower l_P by one: " + dump_state(table, out, indices.factors));
      }
    }
  }
  if (!is_identity(table.tangle())) {
    throw Error(ErrorCode::kInternalError,
                "index sequence exhausted before reaching the identity: " +
                    dump_state(table, out, indices.factors));
  }
  return out;
}

Word factorize_naive(const Tangle& x, const LengthFunction& length) {
  const int n = x.n();
  Tangle current = x;
  int remaining = length(current);
  Word out{n, {}};
  while (remaining != 0) {
    bool stepped = false;
    int hook = 0;
    for (int i = 1; i <= n - 1 && hook == 0; ++i) {
      if (current.contains({top(i), top(i + 1)})) hook = i;
    }
    if (hook != 0) {
      const Edge h{top(hook), top(hook + 1)};
      for (const Edge& e : current.edges()) {
        if (e == h || !merge_edges(h, e)) continue;
        Tangle next = merge(current, h, e);
        if (length(next) == remaining - 1) {
          current = std::move(next);
          out.factors.push_back(u_prime(hook));
          stepped = true;
          break;
        }
      }
    } else {
      for (int i = 1; i <= n - 1; ++i) {
        Tangle next = compose(prime(n, t_prime(i)), current);
        if (length(next) == remaining - 1) {
          current = std::move(next);
          out.factors.push_back(t_prime(i));
          stepped = true;
          break;
        }
      }
    }
    if (!stepped) {
      throw Error(ErrorCode::kNoViableStep,
                  "no step lowers the length of " + format_tangle(current) +
                      " below " + std::to_string(remaining));
    }
    --remaining;
  }
  return out;
}

VerifyResult verify(const Tangle& x, const Word& w) {
  if (w.n != x.n()) {
    throw Error(ErrorCode::kSizeMismatch,
                "word lives in B" + std::to_string(w.n) + ", tangle in B" +
                    std::to_string(x.n()));
  }
  return {compose_word(w) == x, static_cast<int>(w.size()) == length_p(x)};
}

}  // namespace brauer
