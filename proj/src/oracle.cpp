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

#include "brauer/oracle.hpp"

#include <algorithm>
#include <array>
#include <thread>

#include "brauer/format.hpp"

namespace brauer {
namespace {

using Links = std::array<std::uint8_t, 2 * kMaxOracleN>;

constexpr std::uint8_t kUFlag = 0x80;
constexpr std::uint8_t kNoPrime = 0;

std::uint64_t pack(const Links& links, int n) {
  std::uint64_t key = 0;
  for (int v = 0; v < 2 * n; ++v) key |= static_cast<std::uint64_t>(links[v]) << (4 * v);
  return key;
}

Links unpack(std::uint64_t key, int n) {
  Links links{};
  for (int v = 0; v < 2 * n; ++v) links[v] = static_cast<std::uint8_t>((key >> (4 * v)) & 0xF);
  return links;
}

std::uint8_t encode(Prime p) {
  return static_cast<std::uint8_t>((p.kind == PrimeKind::kU ? kUFlag : 0) | p.index);
}

Prime decode(std::uint8_t code) {
  return {(code & kUFlag) ? PrimeKind::kU : PrimeKind::kT, code & 0x7F};
}

// X o p for a prime p: only bottom nodes i and i+1 of X are touched.
Links right_multiply(const Links& x, int n, Prime p) {
  Links y = x;
  const int bi = n + p.index - 1;
  const int bj = n + p.index;
  if (y[bi] == bj) return y;  // a lower hook (i', i+1') absorbs both primes
  const std::uint8_t a = y[bi];
  const std::uint8_t b = y[bj];
  auto join = [&y](int u, int v) {
    y[u] = static_cast<std::uint8_t>(v);
    y[v] = static_cast<std::uint8_t>(u);
  };
  if (p.kind == PrimeKind::kT) {
    join(bi, b);
    join(bj, a);
  } else {
    join(a, b);
    join(bi, bj);
  }
  return y;
}

Links links_of(const Tangle& x) {
  Links links{};
  for (std::size_t v = 0; v < x.links().size(); ++v) {
    links[v] = static_cast<std::uint8_t>(x.links()[v]);
  }
  return links;
}

std::vector<Prime> expansion_order(int n) {
  std::vector<Prime> order;
  for (int i = 1; i <= n - 1; ++i) order.push_back(u_prime(i));
  for (int i = 1; i <= n - 1; ++i) order.push_back(t_prime(i));
  return order;
}

}  // namespace

class DatabaseBuilder {
 public:
  static MinimalDatabase build(int n, const BfsOptions& options) {
    if (n < 1) {
      throw Error(ErrorCode::kIndexOutOfRange, "oracle needs n >= 1");
    }
    if (n > kMaxOracleN) {
      throw Error(ErrorCode::kResourceLimit,
                  "oracle supports n <= " + std::to_string(kMaxOracleN));
    }
    MinimalDatabase db;
    db.n_ = n;
    const std::vector<Prime> order = expansion_order(n);
    add(db, pack(links_of(identity(n)), n), -1, kNoPrime, 0, 0, options);

    std::size_t begin = 0;
    int level = 0;
    const int jobs = std::max(1, options.jobs);
    while (begin < db.keys_.size()) {
      const std::size_t end = db.keys_.size();
      const std::size_t width = end - begin;
      // Phase one: expand the frontier (optionally in parallel).
      std::vector<std::uint64_t> next(width * order.size());
      auto expand = [&](std::size_t from, std::size_t to) {
        for (std::size_t f = from; f < to; ++f) {
          const Links x = unpack(db.keys_[begin + f], n);
          for (std::size_t k = 0; k < order.size(); ++k) {
            next[f * order.size() + k] = pack(right_multiply(x, n, order[k]), n);
          }
        }
      };
      if (jobs == 1 || width < 1024) {
        expand(0, width);
      } else {
        std::vector<std::thread> workers;
        const std::size_t chunk = (width + jobs - 1) / jobs;
        for (std::size_t from = 0; from < width; from += chunk) {
          workers.emplace_back(expand, from, std::min(width, from + chunk));
        }
        for (std::thread& t : workers) t.join();
      }
      // Phase two: commit in the sequential order.
      for (std::size_t f = 0; f < width; ++f) {
        const auto parent = static_cast<MinimalDatabase::Id>(begin + f);
        for (std::size_t k = 0; k < order.size(); ++k) {
          const std::uint64_t key = next[f * order.size() + k];
          if (db.index_.contains(key)) continue;
          const bool is_t = order[k].kind == PrimeKind::kT;
          add(db, key, static_cast<std::int32_t>(parent), encode(order[k]), level + 1,
              db.t_count_[parent] + (is_t ? 1 : 0), options);
        }
      }
      ++level;
      begin = end;
      if (options.progress) options.progress(level, db.keys_.size());
    }
    return db;
  }

 private:
  static void add(MinimalDatabase& db, std::uint64_t key, std::int32_t parent,
                  std::uint8_t last, int length, int t_count, const BfsOptions& options) {
    if (options.node_cap != 0 && db.keys_.size() >= options.node_cap) {
      throw Error(ErrorCode::kResourceLimit,
                  "BFS exceeded node cap " + std::to_string(options.node_cap));
    }
    db.index_.emplace(key, static_cast<MinimalDatabase::Id>(db.keys_.size()));
    db.keys_.push_back(key);
    db.parent_.push_back(parent);
    db.last_prime_.push_back(last);
    db.length_.push_back(static_cast<std::uint8_t>(length));
    db.t_count_.push_back(static_cast<std::uint8_t>(t_count));
  }
};

std::optional<MinimalDatabase::Id> MinimalDatabase::find(const Tangle& x) const {
  if (x.n() != n_) return std::nullopt;
  const auto it = index_.find(pack(links_of(x), n_));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Tangle MinimalDatabase::tangle(Id id) const {
  const Links links = unpack(keys_[id], n_);
  return Tangle::from_links(n_, std::vector<std::uint16_t>(links.begin(), links.begin() + 2 * n_));
}

Word MinimalDatabase::word(Id id) const {
  Word w{n_, {}};
  for (std::int32_t v = static_cast<std::int32_t>(id); parent_[v] >= 0; v = parent_[v]) {
    w.factors.push_back(decode(last_prime_[v]));
  }
  std::reverse(w.factors.begin(), w.factors.end());
  return w;
}

int MinimalDatabase::length_of(const Tangle& x) const {
  if (x.n() != n_) {
    throw Error(ErrorCode::kSizeMismatch, "database holds B" + std::to_string(n_));
  }
  const auto id = find(x);
  if (!id) {
    throw Error(ErrorCode::kInternalError, format_tangle(x) + " missing from database");
  }
  return length_[*id];
}

void MinimalDatabase::write(std::ostream& out) const {
  std::vector<std::string> lines;
  lines.reserve(size());
  for (Id id = 0; id < size(); ++id) {
    lines.push_back(format_tangle(tangle(id)) + '\t' + std::to_string(length_[id]) + '\t' +
                    format_word(word(id)));
  }
  std::sort(lines.begin(), lines.end());
  for (const std::string& line : lines) out << line << '\n';
}

MinimalDatabase bfs_cayley(int n, const BfsOptions& options) {
  return DatabaseBuilder::build(n, options);
}

std::vector<Tangle> enumerate_tangles(int n) {
  std::vector<Tangle> out;
  std::vector<std::uint16_t> links(2 * static_cast<std::size_t>(n));
  std::vector<bool> used(links.size(), false);
  auto recurse = [&](auto&& self) -> void {
    const auto first = std::find(used.begin(), used.end(), false);
    if (first == used.end()) {
      out.push_back(Tangle::from_links(n, links));
      return;
    }
    const auto v = static_cast<std::size_t>(first - used.begin());
    used[v] = true;
    for (std::size_t w = v + 1; w < links.size(); ++w) {
      if (used[w]) continue;
      used[w] = true;
      links[v] = static_cast<std::uint16_t>(w);
      links[w] = static_cast<std::uint16_t>(v);
      self(self);
      used[w] = false;
    }
    used[v] = false;
  };
  recurse(recurse);
  return out;
}

std::map<int, long long> length_table(const MinimalDatabase& db) {
  std::map<int, long long> table;
  for (MinimalDatabase::Id id = 0; id < db.size(); ++id) ++table[db.length(id)];
  return table;
}

MaxMerges max_merges(const MinimalDatabase& db) {
  MaxMerges best;
  const int n = db.n();
  for (MinimalDatabase::Id id = 0; id < db.size(); ++id) {
    const Tangle x = db.tangle(id);
    const int target = db.length(id) - 1;
    int tangle_best = -1;
    for (int i = 1; i <= n - 1 && tangle_best < 0; ++i) {
      const Edge h{top(i), top(i + 1)};
      if (!x.contains(h)) continue;
      tangle_best = 0;
      for (const Edge& e : x.edges()) {
        if (e == h || !merge_edges(h, e)) continue;
        if (db.length_of(merge(x, h, e)) == target) ++tangle_best;
      }
    }
    if (tangle_best < 0) continue;
    if (tangle_best > best.max_count) {
      best = {tangle_best, 1};
    } else if (tangle_best == best.max_count) {
      ++best.num_tangles;
    }
  }
  return best;
}

Assumption2Report check_assumption2(const MinimalDatabase& db) {
  Assumption2Report report;
  for (MinimalDatabase::Id id = 0; id < db.size(); ++id) {
    const Tangle x = db.tangle(id);
    const int crossings = total_crossings(x);
    ++report.tested;
    if (crossings != db.t_count(id)) {
      report.counterexamples.push_back({x, crossings, db.t_count(id)});
    }
  }
  return report;
}

}  // namespace brauer
