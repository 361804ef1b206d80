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


#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "brauer/factorizer.hpp"
#include "brauer/format.hpp"
#include "brauer/oracle.hpp"
#include "brauer/render.hpp"
#include "brauer/rewriter.hpp"
#include "brauer/symmetric.hpp"
#include "brauer/tau.hpp"
#include "brauer/temperley_lieb.hpp"

namespace brauer {
namespace {

// Sizes at or above this need --huge for oracle work.
constexpr int kHugeN = 7;

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

// Non-empty trimmed lines of a file, or of `in` when path is empty or "-".
std::vector<std::string> read_lines(const std::string& path, std::istream& in) {
  std::unique_ptr<std::ifstream> file;
  std::istream* src = &in;
  if (!path.empty() && path != "-") {
    file = std::make_unique<std::ifstream>(path);
    if (!*file) throw Error(ErrorCode::kParseError, "cannot open " + path);
    src = file.get();
  }
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(*src, line)) {
    line = trim(line);
    if (!line.empty() && line[0] != '#') lines.push_back(line);
  }
  return lines;
}

std::vector<Tangle> read_tangles(const std::string& path, std::istream& in) {
  std::vector<Tangle> out;
  for (const std::string& line : read_lines(path, in)) out.push_back(parse_tangle(line));
  if (out.empty()) throw Error(ErrorCode::kParseError, "no tangle on input");
  return out;
}

// Joins positional tokens into one word text, falling back to `in`.
std::string word_text(const std::vector<std::string>& tokens, std::istream& in) {
  std::string text;
  if (tokens.empty()) {
    std::ostringstream all;
    all << in.rdbuf();
    text = all.str();
  } else {
    for (const std::string& t : tokens) text += t + ' ';
  }
  return text;
}

void require_oracle_size(int n, bool huge) {
  if (n >= kHugeN && !huge) {
    throw Error(ErrorCode::kResourceLimit,
                "N = " + std::to_string(n) + " needs --huge");
  }
}

MinimalDatabase build_database(int n, bool huge, int jobs, std::ostream& err) {
  require_oracle_size(n, huge);
  BfsOptions options;
  options.jobs = jobs;
  if (huge) {
    options.progress = [&err](int level, std::size_t size) {
      err << "level " << level << ": " << size << " tangles\n";
    };
  }
  return bfs_cayley(n, options);
}

struct Settings {
  // factorize
  std::string input;
  std::string naive;
  bool min_t = false;
  bool verify_flag = false;
  bool debug_table = false;
  bool tl = false;
  // length
  bool both = false;
  // compose / reduce / render
  int n = -1;
  std::vector<std::string> tokens;
  std::size_t orbit_cap = ReduceOptions{}.orbit_cap;
  std::string format = "svg";
  // oracle and checks
  int oracle_n = 0;
  bool huge = false;
  int jobs = 1;
  std::string output;
  double scale = 2.0;
  std::int64_t patience = 2000000;
  std::uint64_t seed = 1;
};

int do_factorize(const Settings& s, CLI::Option* naive_opt, std::istream& in,
                 std::ostream& out, std::ostream& err) {
  const bool naive = naive_opt->count() > 0;
  if (s.tl && (naive || s.min_t)) {
    throw CLI::ValidationError("--tl", "cannot be combined with --naive or --min-t");
  }
  for (const Tangle& x : read_tangles(s.input, in)) {
    Word w;
    if (s.tl) {
      w = factorize_tl(x);
    } else if (naive) {
      const std::string mode = s.naive.empty() ? "lp" : s.naive;
      if (mode == "lp") {
        w = factorize_naive(x, [](const Tangle& y) { return length_p(y); });
      } else if (mode == "ltau") {
        w = factorize_naive(x, length_tau);
      } else {
        const auto db = std::make_shared<MinimalDatabase>(build_database(x.n(), s.huge, s.jobs, err));
        w = factorize_naive(x, [db](const Tangle& y) { return db->length_of(y); });
      }
    } else {
      w = factorize(x, {.min_t = s.min_t, .debug_table = s.debug_table});
    }
    out << format_word(w);
    if (s.verify_flag) {
      const VerifyResult r = verify(x, w);
      out << "\tcomposes=" << (r.composes ? "true" : "false")
          << " length_minimal=" << (r.length_minimal ? "true" : "false");
    }
    out << '\n';
  }
  return 0;
}

void print_tau(const Tangle& x, std::ostream& out) {
  const TauImage t = tau_with_labels(x);
  out << format_tangle(t.image) << '\n';
  auto rows = [&](Row row, const std::vector<std::optional<PolarityLabel>>& labels) {
    for (int i = 1; i <= x.n(); ++i) {
      const NodeRef v{row, i};
      const auto& label = labels[i - 1];
      out << format_node(v) << '\t' << polarity_symbol(node_polarity(x, v)) << '\t'
          << (label ? std::to_string(label->counter) : std::string("-")) << '\n';
    }
  };
  rows(Row::kTop, t.top_labels);
  rows(Row::kBottom, t.bottom_labels);
}

void print_a2(const MinimalDatabase& db, std::ostream& out, std::ostream& err) {
  const Assumption2Report r = check_assumption2(db);
  out << "N,tested,counterexamples\n" << db.n() << ',' << r.tested << ','
      << r.counterexamples.size() << '\n';
  for (const CrossingMismatch& m : r.counterexamples) {
    err << "counterexample: " << format_tangle(m.tangle) << " crossings=" << m.crossings
        << " t_count=" << m.t_count << '\n';
  }
}

int dispatch(CLI::App& app, const Settings& s, CLI::Option* naive_opt, std::istream& in,
             std::ostream& out, std::ostream& err) {
  auto sub = [&app](const char* name) { return app.get_subcommand(name)->parsed(); };
  if (sub("factorize")) return do_factorize(s, naive_opt, in, out, err);
  if (sub("length")) {
    for (const Tangle& x : read_tangles(s.input, in)) {
      if (s.both) {
        out << "lp=" << length_p(x) << " ltau=" << length_tau(x) << '\n';
      } else {
        out << length_p(x) << '\n';
      }
    }
    return 0;
  }
  if (sub("tau")) {
    for (const Tangle& x : read_tangles(s.input, in)) print_tau(x, out);
    return 0;
  }
  if (sub("compose")) {
    out << format_tangle(compose_word(parse_word(word_text(s.tokens, in), s.n))) << '\n';
    return 0;
  }
  if (sub("reduce")) {
    const ReduceResult r = reduce(parse_word(word_text(s.tokens, in), s.n), {s.orbit_cap});
    out << format_word(r.word) << '\n';
    if (r.budget_exhausted) err << "warning: orbit cap reached\n";
    return 0;
  }
  if (sub("render")) {
    const std::string text = trim(word_text(s.tokens, in));
    if (!text.empty() && text[0] == 'B') {
      out << render_svg(parse_tangle(text));
    } else {
      out << render_svg(parse_word(text, s.n));
    }
    return 0;
  }
  if (sub("check-a1")) {
    require_oracle_size(s.oracle_n, s.huge);
    err << "seed=" << s.seed << '\n';
    const MinimalDatabase db = build_database(s.oracle_n, s.huge, s.jobs, err);
    Assumption1Options options;
    options.scale = s.scale;
    options.patience = s.patience;
    options.seed = s.seed;
    options.reduce.orbit_cap = s.orbit_cap;
    const Assumption1Report r = check_assumption1(db, options);
    out << "N,tested,counterexamples\n" << r.n << ',' << r.tangles_tested << ','
        << r.counterexamples.size() << '\n';
    for (const Assumption1Counterexample& c : r.counterexamples) {
      err << "counterexample: " << format_word(c.input) << " -> " << format_word(c.reduced)
          << " minimal=" << c.minimal_length << '\n';
    }
    if (r.budget_exhausted > 0) err << "warning: " << r.budget_exhausted << " samples hit the orbit cap\n";
    return 0;
  }
  if (sub("check-a2")) {
    print_a2(build_database(s.oracle_n, s.huge, s.jobs, err), out, err);
    return 0;
  }
  CLI::App* oracle = app.get_subcommand("oracle");
  if (oracle->parsed()) {
    const MinimalDatabase db = build_database(s.oracle_n, s.huge, s.jobs, err);
    if (oracle->get_subcommand("build")->parsed()) {
      if (s.output.empty()) {
        db.write(out);
      } else {
        std::ofstream file(s.output);
        if (!file) throw Error(ErrorCode::kParseError, "cannot write " + s.output);
        db.write(file);
      }
    } else if (oracle->get_subcommand("table")->parsed()) {
      out << "N,k,count\n";
      for (const auto& [k, count] : length_table(db)) {
        out << db.n() << ',' << k << ',' << count << '\n';
      }
    } else if (oracle->get_subcommand("max-merges")->parsed()) {
      const MaxMerges m = max_merges(db);
      out << "N,max_merges,tangles\n" << db.n() << ',' << m.max_count << ',' << m.num_tangles
          << '\n';
    } else {
      print_a2(db, out, err);
    }
    return 0;
  }
  return 0;
}

void add_oracle_args(CLI::App* app, Settings& s) {
  app->add_option("N", s.oracle_n, "tangle size")->required()->check(CLI::Range(1, kMaxOracleN));
  app->add_flag("--huge", s.huge, "allow N >= 7");
  app->add_option("--jobs", s.jobs, "worker threads for BFS expansion")
      ->check(CLI::Range(1, 256));
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Minimal factorization of Brauer monoid tangles", "brauer"};
  app.require_subcommand(1, 1);
  Settings s;

  CLI::App* factorize_cmd = app.add_subcommand("factorize", "minimal word for each input tangle");
  factorize_cmd->add_option("input", s.input, "tangle file (default: stdin)");
  CLI::Option* naive_opt =
      factorize_cmd->add_option("--naive", s.naive, "reference algorithm: lp, ltau or oracle")
          ->expected(0, 1)
          ->check(CLI::IsMember({"", "lp", "ltau", "oracle"}));
  factorize_cmd->add_flag("--min-t", s.min_t, "prefer merges with fewer crossings");
  factorize_cmd->add_flag("--verify", s.verify_flag, "print verification booleans");
  factorize_cmd->add_flag("--debug-table", s.debug_table, "recompute crossing counts each step");
  factorize_cmd->add_flag("--tl", s.tl, "planar algorithm");
  factorize_cmd->add_flag("--huge", s.huge, "allow --naive=oracle at N >= 7");
  factorize_cmd->add_option("--jobs", s.jobs, "worker threads for --naive=oracle");

  CLI::App* length_cmd = app.add_subcommand("length", "minimal length of each input tangle");
  length_cmd->add_option("input", s.input, "tangle file (default: stdin)");
  length_cmd->add_flag("--both", s.both, "print both length functions");

  CLI::App* tau_cmd = app.add_subcommand("tau", "permutation image and node labels");
  tau_cmd->add_option("input", s.input, "tangle file (default: stdin)");

  CLI::App* compose_cmd = app.add_subcommand("compose", "tangle of a word");
  compose_cmd->add_option("--n", s.n, "tangle size (default: inferred)");
  compose_cmd->add_option("word", s.tokens, "word tokens (default: stdin)");

  CLI::App* reduce_cmd = app.add_subcommand("reduce", "rewrite a word with the monoid axioms");
  reduce_cmd->add_option("--n", s.n, "tangle size (default: inferred)");
  reduce_cmd->add_option("--orbit-cap", s.orbit_cap, "words visited per orbit search");
  reduce_cmd->add_option("word", s.tokens, "word tokens (default: stdin)");

  CLI::App* render_cmd = app.add_subcommand("render", "SVG diagram of a tangle or word");
  render_cmd->add_option("--format", s.format, "output format")->check(CLI::IsMember({"svg"}));
  render_cmd->add_option("--n", s.n, "tangle size for a word (default: inferred)");
  render_cmd->add_option("input", s.tokens, "tangle or word (default: stdin)");

  CLI::App* a1_cmd = app.add_subcommand("check-a1", "random reduction test against the oracle");
  add_oracle_args(a1_cmd, s);
  a1_cmd->add_option("--scale", s.scale, "maximum sample length factor")->check(CLI::PositiveNumber);
  a1_cmd->add_option("--patience", s.patience, "samples without a new tangle before stopping")
      ->check(CLI::NonNegativeNumber);
  a1_cmd->add_option("--seed", s.seed, "random seed");
  a1_cmd->add_option("--orbit-cap", s.orbit_cap, "words visited per orbit search");

  CLI::App* a2_cmd = app.add_subcommand("check-a2", "crossings versus T-primes of stored words");
  add_oracle_args(a2_cmd, s);

  CLI::App* oracle_cmd = app.add_subcommand("oracle", "breadth-first database of minimal words");
  oracle_cmd->require_subcommand(1, 1);
  CLI::App* build_cmd = oracle_cmd->add_subcommand("build", "write the database");
  add_oracle_args(build_cmd, s);
  build_cmd->add_option("--output,-o", s.output, "file (default: stdout)");
  add_oracle_args(oracle_cmd->add_subcommand("table", "CSV of tangles per length"), s);
  add_oracle_args(oracle_cmd->add_subcommand("max-merges", "largest viable merge count"), s);
  add_oracle_args(oracle_cmd->add_subcommand("check-a2", "crossings versus T-primes"), s);

  try {
    app.parse(argc, argv);
    return dispatch(app, s, naive_opt, in, out, err);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  } catch (const Error& e) {
    err << "error: " << error_name(e.code()) << ": " << e.what() << '\n';
    return 1;
  }
}

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  std::vector<const char*> argv{"brauer"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data(), in, out, err);
}

}  // namespace brauer
