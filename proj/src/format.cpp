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

#include "brauer/format.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <vector>

namespace brauer {
namespace {

// Minimal cursor over the input; every failure reports the byte offset.
class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool done() {
    skip_space();
    return pos_ >= text_.size();
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  int integer() {
    skip_space();
    int value = 0;
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr == first) fail("expected an integer");
    pos_ += static_cast<std::size_t>(ptr - first);
    return value;
  }

  NodeRef node() {
    const int index = integer();
    if (pos_ < text_.size() && text_[pos_] == '\'') {
      ++pos_;
      return bottom(index);
    }
    return top(index);
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::kParseError,
                what + " at offset " + std::to_string(pos_) + " in \"" +
                    std::string(text_) + "\"");
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string format_node(NodeRef v) {
  std::string out = std::to_string(v.index);
  if (v.row == Row::kBottom) out += '\'';
  return out;
}

std::string format_edge(const Edge& e) {
  return "(" + format_node(e.a) + "," + format_node(e.b) + ")";
}

std::string format_prime(Prime p) {
  return (p.kind == PrimeKind::kT ? "T" : "U") + std::to_string(p.index);
}

std::string format_tangle(const Tangle& x) {
  std::string out = "B" + std::to_string(x.n()) + ":";
  for (const Edge& e : x.edges()) {
    out += ' ';
    out += format_edge(e);
  }
  return out;
}

std::string format_word(const Word& w) {
  std::string out;
  for (const Prime& p : w.factors) {
    if (!out.empty()) out += ' ';
    out += format_prime(p);
  }
  return out;
}

Tangle parse_tangle(std::string_view text) {
  Scanner in(text);
  in.expect('B');
  const int n = in.integer();
  in.expect(':');
  std::vector<std::pair<NodeRef, NodeRef>> pairs;
  while (!in.done()) {
    in.expect('(');
    const NodeRef x = in.node();
    in.expect(',');
    const NodeRef y = in.node();
    in.expect(')');
    pairs.emplace_back(x, y);
  }
  return Tangle::from_pairs(n, pairs);
}

Word parse_word(std::string_view text, int n) {
  Word w;
  Scanner in(text);
  int max_index = 0;
  while (!in.done()) {
    PrimeKind kind = PrimeKind::kT;
    if (in.peek('T')) {
      in.expect('T');
    } else if (in.peek('U')) {
      in.expect('U');
      kind = PrimeKind::kU;
    } else {
      in.fail("expected 'T' or 'U'");
    }
    const int index = in.integer();
    max_index = std::max(max_index, index);
    w.factors.push_back({kind, index});
  }
  w.n = n >= 0 ? n : std::max(1, max_index + 1);
  validate_word(w);
  return w;
}

}  // namespace brauer
