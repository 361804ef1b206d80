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


#include "brauer/render.hpp"

#include <algorithm>
#include <sstream>

#include "brauer/format.hpp"

namespace brauer {
namespace {

constexpr int kLabelWidth = 40;
constexpr int kNodeRadius = 4;

int node_x(int index) { return kMargin + kLabelWidth + (index - 1) * kNodeSpacing; }

// Draws the edges of x between row y_top and row y_top + gap.
void draw_edges(std::ostringstream& out, const Tangle& x, int y_top) {
  const int y_bottom = y_top + row_gap(x.n());
  for (const Edge& e : x.edges()) {
    const int xa = node_x(e.a.index);
    const int xb = node_x(e.b.index);
    switch (edge_kind(e)) {
      case EdgeKind::kUpperHook:
      case EdgeKind::kLowerHook: {
        const bool upper = edge_kind(e) == EdgeKind::kUpperHook;
        const int y = upper ? y_top : y_bottom;
        const int r = (xb - xa) / 2;
        out << "  <path d=\"M " << xa << ' ' << y << " A " << r << ' ' << r << " 0 0 "
            << (upper ? 0 : 1) << ' ' << xb << ' ' << y
            << "\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>\n";
        break;
      }
      default: {
        if (xa == xb) {
          out << "  <line x1=\"" << xa << "\" y1=\"" << y_top << "\" x2=\"" << xb
              << "\" y2=\"" << y_bottom << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
        } else {
          const int mid = (y_top + y_bottom) / 2;
          out << "  <path d=\"M " << xa << ' ' << y_top << " C " << xa << ' ' << mid << ' '
              << xb << ' ' << mid << ' ' << xb << ' ' << y_bottom
              << "\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>\n";
        }
        break;
      }
    }
  }
}

void draw_nodes(std::ostringstream& out, int n, int y) {
  for (int i = 1; i <= n; ++i) {
    out << "  <circle cx=\"" << node_x(i) << "\" cy=\"" << y << "\" r=\"" << kNodeRadius
        << "\" fill=\"black\"/>\n";
  }
}

void draw_text(std::ostringstream& out, int x, int y, const std::string& text) {
  out << "  <text x=\"" << x << "\" y=\"" << y
      << "\" font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"middle\">" << text
      << "</text>\n";
}

// Stacks the given diagrams; labels may be empty.
std::string render_stack(int n, const std::vector<Tangle>& panels,
                         const std::vector<std::string>& labels) {
  const int gap = row_gap(n);
  const int count = static_cast<int>(std::max<std::size_t>(panels.size(), 1));
  const int width = 2 * kMargin + kLabelWidth + std::max(0, n - 1) * kNodeSpacing;
  const int height = 2 * kMargin + count * gap;
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
      << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  for (int i = 1; i <= n; ++i) {
    draw_text(out, node_x(i), kMargin - 16, std::to_string(i));
    draw_text(out, node_x(i), kMargin + count * gap + 26, std::to_string(i) + "'");
  }
  for (std::size_t k = 0; k < panels.size(); ++k) {
    const int y = kMargin + static_cast<int>(k) * gap;
    draw_edges(out, panels[k], y);
    if (!labels[k].empty()) draw_text(out, kMargin / 2 + 4, y + gap / 2 + 5, labels[k]);
  }
  for (int row = 0; row <= count; ++row) draw_nodes(out, n, kMargin + row * gap);
  out << "</svg>\n";
  return out.str();
}

}  // namespace

int row_gap(int n) { return std::max(80, kNodeSpacing * n); }

std::string render_svg(const Tangle& x) { return render_stack(x.n(), {x}, {""}); }

std::string render_svg(const Word& w) {
  validate_word(w);
  if (w.empty()) return render_svg(identity(w.n));
  std::vector<Tangle> panels;
  std::vector<std::string> labels;
  for (const Prime& p : w.factors) {
    panels.push_back(prime(w.n, p));
    labels.push_back(format_prime(p));
  }
  return render_stack(w.n, panels, labels);
}

}  // namespace brauer
