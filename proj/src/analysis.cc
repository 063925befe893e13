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

#include "rvg/analysis.h"

#include <algorithm>
#include <climits>
#include <set>

#include "absl/status/status.h"
#include "absl/strings/ascii.h"
#include "absl/strings/str_cat.h"
#include "rvg/canonical.h"

namespace rvg {

const char* ParameterName(Parameter p) {
  switch (p) {
    case Parameter::kHeight:
      return "height";
    case Parameter::kWidth:
      return "width";
    case Parameter::kArea:
      return "area";
    case Parameter::kPerimeter:
      return "perimeter";
  }
  return "?";
}

absl::StatusOr<Parameter> ParseParameter(std::string_view text) {
  const std::string lower = absl::AsciiStrToLower(std::string(text));
  for (Parameter p : kAllParameters) {
    if (lower == ParameterName(p)) return p;
  }
  return absl::InvalidArgumentError(absl::StrCat("unknown parameter '", std::string(text),
                                                 "'"));
}

Box Box::Normalized(int a, int b) {
  return Box{std::min(a, b), std::max(a, b)};
}

int Box::Value(Parameter p) const {
  switch (p) {
    case Parameter::kHeight:
      return height;
    case Parameter::kWidth:
      return width;
    case Parameter::kArea:
      return area();
    case Parameter::kPerimeter:
      return perimeter();
  }
  return 0;
}

bool Box::FitsIn(const Box& outer) const {
  const Box a = Normalized(height, width);
  const Box b = Normalized(outer.height, outer.width);
  return a.height <= b.height && a.width <= b.width;
}

int CeilSqrt(int n) {
  int k = 0;
  while (k * k < n) ++k;
  return k;
}

int RoundSqrt(int n) {
  // floor(sqrt(n) + 1/2) is the largest m with (m - 1/2)^2 <= n, i.e.
  // m(m - 1) < n.
  int m = 0;
  while ((m + 1) * m < n) ++m;
  return m;
}

absl::StatusOr<ParamBounds> LowerBounds(int n) {
  if (n < 1) return absl::InvalidArgumentError("need n >= 1");
  const int c = CeilSqrt(n);
  return ParamBounds{1, c, n, 2 * RoundSqrt(n) + 2 * c};
}

std::vector<Box> PerimeterEqualityBoxes(int n) {
  std::vector<Box> boxes;
  if (n < 1) return boxes;
  const int sum = RoundSqrt(n) + CeilSqrt(n);
  for (int h = 1; 2 * h <= sum; ++h) {
    if (h * (sum - h) >= n) boxes.push_back(Box{h, sum - h});
  }
  return boxes;
}

BoxFrontier EmptyGraphFrontier(int n) {
  BoxFrontier f;
  std::vector<NamedRect> rects;
  for (int i = 0; i < n; ++i) {
    rects.push_back(NamedRect{DefaultVertexName(i), Rect{i, i, i + 1, i + 1}});
  }
  FrontierBox box{Box{n, n}, true, *Representation::Create(std::move(rects))};
  f.boxes.push_back(std::move(box));
  f.max_width = n;
  if (absl::StatusOr<CanonicalForm> c = Canonical(EmptyGraph(n)); c.ok()) {
    f.graph_id = c->encoding;
  }
  return f;
}

std::array<ParamValue, 4> ParametersFromFrontier(const BoxFrontier& f) {
  std::array<ParamValue, 4> out{};
  for (Parameter p : kAllParameters) {
    ParamValue& v = out[static_cast<int>(p)];
    v.value = INT_MAX;
    for (const FrontierBox& b : f.boxes) {
      if (b.box.Value(p) < v.value) {
        v.value = b.box.Value(p);
        v.box = b.box;
      }
    }
    v.proven = f.complete && !f.boxes.empty();
  }
  return out;
}

Representation Glue(const Representation& s1, const Representation& s2,
                    bool transpose_second) {
  const Representation second =
      transpose_second ? Transform(s2, Symmetry::kTranspose) : s2;
  std::vector<NamedRect> rects = s1.rects();
  std::set<std::string> names;
  for (const NamedRect& r : rects) names.insert(r.name);
  for (NamedRect r : second.rects()) {
    while (names.count(r.name) > 0) r.name += "'";
    names.insert(r.name);
    r.rect.x1 += s1.box_width();
    r.rect.x2 += s1.box_width();
    r.rect.y1 += s1.box_height();
    r.rect.y2 += s1.box_height();
    rects.push_back(std::move(r));
  }
  return *Representation::Create(std::move(rects));
}

namespace {

struct Option {
  const FrontierBox* first;
  const FrontierBox* second;
  bool transpose;
  Box combined;  // Not normalized: first's height + second's extent.
};

std::vector<Option> Options(const BoxFrontier& h, const BoxFrontier& j) {
  std::vector<Option> options;
  for (const FrontierBox& a : h.boxes) {
    for (const FrontierBox& b : j.boxes) {
      options.push_back(Option{&a, &b, false,
                               Box{a.box.height + b.box.height,
                                   a.box.width + b.box.width}});
      options.push_back(Option{&a, &b, true,
                               Box{a.box.height + b.box.width,
                                   a.box.width + b.box.height}});
    }
  }
  return options;
}

// The witness boxes are stored as height x width; transposing the second
// piece swaps its sides.
std::optional<Representation> GlueWitness(const Option& o) {
  if (!o.first->witness.has_value() || !o.second->witness.has_value()) {
    return std::nullopt;
  }
  return Glue(*o.first->witness, *o.second->witness, o.transpose);
}

}  // namespace

absl::StatusOr<Composition> ComposeDisjoint(const BoxFrontier& h,
                                            const BoxFrontier& j) {
  if (h.boxes.empty() || j.boxes.empty()) {
    return absl::InvalidArgumentError("composition needs nonempty frontiers");
  }
  const std::vector<Option> options = Options(h, j);
  Composition out;
  const bool proven = h.complete && j.complete;
  for (Parameter p : kAllParameters) {
    const Option* best = nullptr;
    int best_value = INT_MAX;
    for (const Option& o : options) {
      const Box box = Box::Normalized(o.combined.height, o.combined.width);
      if (box.Value(p) < best_value) {
        best_value = box.Value(p);
        best = &o;
      }
    }
    ComposedValue& v = out.values[static_cast<int>(p)];
    v.result.value = best_value;
    v.result.proven = proven;
    v.result.box = Box::Normalized(best->combined.height, best->combined.width);
    v.first = best->first->box;
    v.second = best->transpose
                   ? Box{best->second->box.width, best->second->box.height}
                   : best->second->box;
    v.witness = GlueWitness(*best);
  }
  return out;
}

// Exact because in any representation of a disjoint union the two parts use
// disjoint rows and disjoint columns.
BoxFrontier ComposeFrontiers(const BoxFrontier& h, const BoxFrontier& j) {
  std::vector<std::pair<Box, std::optional<Representation>>> all;
  for (const Option& o : Options(h, j)) {
    all.emplace_back(Box::Normalized(o.combined.height, o.combined.width),
                     GlueWitness(o));
  }
  BoxFrontier f;
  f.complete = h.complete && j.complete;
  f.max_width = 0;
  for (size_t a = 0; a < all.size(); ++a) {
    bool dominated = false;
    for (size_t b = 0; b < all.size() && !dominated; ++b) {
      if (a == b) continue;
      const bool fits = all[b].first.FitsIn(all[a].first);
      dominated = fits && (all[b].first != all[a].first || b < a);
    }
    if (!dominated) {
      f.boxes.push_back(FrontierBox{all[a].first, f.complete, all[a].second});
      f.max_width = std::max(f.max_width, all[a].first.width);
    }
  }
  std::sort(f.boxes.begin(), f.boxes.end(),
            [](const FrontierBox& x, const FrontierBox& y) { return x.box < y.box; });
  return f;
}

UnionBounds UnionUpperBounds(int width_h, int width_j) {
  const int w = width_h + width_j;
  return UnionBounds{w, w * w};
}

absl::StatusOr<QK8Prediction> QK8Construction(int n) {
  if (n < 1) return absl::InvalidArgumentError("need n >= 1");
  QK8Prediction p;
  p.q = n / 8;
  p.r = n % 8;
  p.height = p.width = n + 2 * p.q;
  p.area = p.height * p.width;
  p.perimeter = 4 * n + 8 * p.q;
  return p;
}

absl::StatusOr<QK8Prediction> QK8ByComposition(int n) {
  if (n < 1) return absl::InvalidArgumentError("need n >= 1");
  QK8Prediction p;
  p.q = n / 8;
  p.r = n % 8;
  BoxFrontier k8;
  k8.boxes.push_back(FrontierBox{Box{10, 10}, true, std::nullopt});
  k8.max_width = 10;
  std::optional<BoxFrontier> acc;
  if (p.r > 0) acc = EmptyGraphFrontier(p.r);
  for (int i = 0; i < p.q; ++i) {
    acc = acc.has_value() ? ComposeFrontiers(*acc, k8) : k8;
  }
  const std::array<ParamValue, 4> v = ParametersFromFrontier(*acc);
  p.height = v[static_cast<int>(Parameter::kHeight)].value;
  p.width = v[static_cast<int>(Parameter::kWidth)].value;
  p.area = v[static_cast<int>(Parameter::kArea)].value;
  p.perimeter = v[static_cast<int>(Parameter::kPerimeter)].value;
  return p;
}

std::optional<SameBoxCertificate> SameBoxShortcut(const Graph& g,
                                                  const Representation& rep,
                                                  int proven_height,
                                                  int proven_width) {
  const Box box = Box::Normalized(rep.box_height(), rep.box_width());
  if (box.height != proven_height || box.width != proven_width) {
    return std::nullopt;
  }
  absl::StatusOr<bool> same = Isomorphic(VisibilityGraph(rep).graph, g);
  if (!same.ok() || !*same) return std::nullopt;
  return SameBoxCertificate{box.area(), box.perimeter()};
}

absl::StatusOr<CharacterizationReport> EqualityCharacterizations(
    const Graph& g, const std::array<ParamValue, 4>& optima,
    const BoxFrontier& frontier) {
  const int n = g.num_vertices();
  absl::StatusOr<ParamBounds> bounds = LowerBounds(n);
  if (!bounds.ok()) return bounds.status();
  for (const ParamValue& v : optima) {
    if (!v.proven) {
      return absl::FailedPreconditionError("optima must be proven");
    }
  }
  CharacterizationReport r;
  r.height_is_one = optima[static_cast<int>(Parameter::kHeight)].value == 1;
  absl::StatusOr<bool> path = Isomorphic(g, PathGraph(n));
  if (!path.ok()) return path.status();
  r.is_path = *path;
  r.area_is_n = optima[static_cast<int>(Parameter::kArea)].value == n;
  for (int a = 1; a <= n; ++a) {
    if (n % a != 0) continue;
    absl::StatusOr<bool> grid = Isomorphic(g, GridGraph(a, n / a));
    if (!grid.ok()) return grid.status();
    r.is_grid = r.is_grid || *grid;
  }
  const int w = bounds->width_lb;
  r.width_at_bound = optima[static_cast<int>(Parameter::kWidth)].value == w;
  r.perimeter_at_bound =
      optima[static_cast<int>(Parameter::kPerimeter)].value == bounds->perimeter_lb;
  const std::vector<Box> equality = PerimeterEqualityBoxes(n);
  for (const FrontierBox& b : frontier.boxes) {
    r.fits_square_bound = r.fits_square_bound || b.box.FitsIn(Box{w, w});
    for (const Box& e : equality) {
      r.fits_perimeter_box = r.fits_perimeter_box || b.box.FitsIn(e);
    }
  }
  if (!r.consistent()) {
    return absl::InternalError(
        "equality characterization disagrees with search results");
  }
  return r;
}

}  // namespace rvg
