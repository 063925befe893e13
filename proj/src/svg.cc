// Copyright 2026 The rvgkit Authors
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

#include "rvg/svg.h"

#include <algorithm>

#include "absl/strings/str_cat.h"

namespace rvg {

namespace {

std::string Escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&':
        out += "&amp;";
        break;
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '"':
        out += "&quot;";
        break;
      default:
        out += c;
    }
  }
  return out;
}

}  // namespace

std::string RenderSvg(const Representation& rep, const SvgOptions& options) {
  const int s = std::max(1, options.cell);
  const int margin = s / 2;
  const int u = rep.box_width();
  const int v = rep.box_height();
  const int width = u * s + 2 * margin;
  const int height = v * s + 2 * margin;
  auto px = [&](int x) { return margin + x * s; };
  auto py = [&](int y) { return margin + (v - y) * s; };

  std::string out = absl::StrCat(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"", width,
      "\" height=\"", height, "\" viewBox=\"0 0 ", width, " ", height, "\">\n");
  absl::StrAppend(&out, "  <g stroke=\"#d0d0d0\" stroke-width=\"1\">\n");
  for (int x = 0; x <= u; ++x) {
    absl::StrAppend(&out, "    <line x1=\"", px(x), "\" y1=\"", py(0), "\" x2=\"",
                    px(x), "\" y2=\"", py(v), "\"/>\n");
  }
  for (int y = 0; y <= v; ++y) {
    absl::StrAppend(&out, "    <line x1=\"", px(0), "\" y1=\"", py(y), "\" x2=\"",
                    px(u), "\" y2=\"", py(y), "\"/>\n");
  }
  absl::StrAppend(&out, "  </g>\n");

  absl::StrAppend(&out, "  <g fill=\"#cfe3f7\" stroke=\"#1f4e79\" stroke-width=\"2\">\n");
  for (const NamedRect& r : rep.rects()) {
    absl::StrAppend(&out, "    <rect x=\"", px(r.rect.x1), "\" y=\"", py(r.rect.y2),
                    "\" width=\"", r.rect.width() * s, "\" height=\"",
                    r.rect.height() * s, "\"/>\n");
  }
  absl::StrAppend(&out, "  </g>\n");

  if (options.sight_lines) {
    absl::StrAppend(&out,
                    "  <g stroke=\"#c0392b\" stroke-width=\"1.5\" "
                    "stroke-dasharray=\"4 3\">\n");
    for (const SightEdge& e : VisibilityGraph(rep).edges) {
      const Rect& a = rep.rect(e.a);
      const Rect& b = rep.rect(e.b);
      if (e.orientation == Orientation::kHorizontal) {
        const int from = std::min(a.x2, b.x2);
        const int to = std::max(a.x1, b.x1);
        const double y = py(e.lane) - s / 2.0;
        absl::StrAppend(&out, "    <line x1=\"", px(from), "\" y1=\"", y,
                        "\" x2=\"", px(to), "\" y2=\"", y, "\"/>\n");
      } else {
        const int from = std::min(a.y2, b.y2);
        const int to = std::max(a.y1, b.y1);
        const double x = px(e.lane) + s / 2.0;
        absl::StrAppend(&out, "    <line x1=\"", x, "\" y1=\"", py(from),
                        "\" x2=\"", x, "\" y2=\"", py(to), "\"/>\n");
      }
    }
    absl::StrAppend(&out, "  </g>\n");
  }

  absl::StrAppend(&out,
                  "  <g font-family=\"sans-serif\" text-anchor=\"middle\" "
                  "dominant-baseline=\"central\" font-size=\"",
                  s / 2, "\">\n");
  for (const NamedRect& r : rep.rects()) {
    const double cx = (px(r.rect.x1) + px(r.rect.x2)) / 2.0;
    const double cy = (py(r.rect.y1) + py(r.rect.y2)) / 2.0;
    absl::StrAppend(&out, "    <text x=\"", cx, "\" y=\"", cy, "\">",
                    Escape(r.name), "</text>\n");
  }
  absl::StrAppend(&out, "  </g>\n</svg>\n");
  return out;
}

}  // namespace rvg
