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

#include "rvg/geometry.h"

#include <algorithm>
#include <limits>
#include <set>

#include "absl/strings/str_cat.h"

namespace rvg {

bool InteriorsOverlap(const Rect& a, const Rect& b) {
  return a.x1 < b.x2 && b.x1 < a.x2 && a.y1 < b.y2 && b.y1 < a.y2;
}

std::optional<ValidationIssue> FindValidationIssue(
    std::span<const NamedRect> rects) {
  for (const NamedRect& r : rects) {
    if (!r.rect.IsWellFormed()) {
      return ValidationIssue{ValidationIssue::Kind::kMalformedRect, r.name, ""};
    }
  }
  std::set<std::string_view> names;
  for (const NamedRect& r : rects) {
    if (!names.insert(r.name).second) {
      return ValidationIssue{ValidationIssue::Kind::kDuplicateName, r.name,
                             r.name};
    }
  }
  for (size_t i = 0; i < rects.size(); ++i) {
    for (size_t j = i + 1; j < rects.size(); ++j) {
      if (InteriorsOverlap(rects[i].rect, rects[j].rect)) {
        return ValidationIssue{ValidationIssue::Kind::kInteriorOverlap,
                               rects[i].name, rects[j].name};
      }
    }
  }
  return std::nullopt;
}

absl::Status Validate(std::span<const NamedRect> rects) {
  std::optional<ValidationIssue> issue = FindValidationIssue(rects);
  if (!issue.has_value()) return absl::OkStatus();
  switch (issue->kind) {
    case ValidationIssue::Kind::kMalformedRect:
      return absl::InvalidArgumentError(
          absl::StrCat("malformed rectangle '", issue->first,
                       "': need x1 < x2 and y1 < y2"));
    case ValidationIssue::Kind::kDuplicateName:
      return absl::InvalidArgumentError(
          absl::StrCat("duplicate rectangle name '", issue->first, "'"));
    case ValidationIssue::Kind::kInteriorOverlap:
      return absl::InvalidArgumentError(
          absl::StrCat("interiors of '", issue->first, "' and '",
                       issue->second, "' overlap"));
  }
  return absl::InternalError("unreachable");
}

absl::StatusOr<Representation> Representation::Create(
    std::vector<NamedRect> rects) {
  if (absl::Status s = Validate(rects); !s.ok()) return s;
  Representation rep;
  if (rects.empty()) return rep;
  int min_x = std::numeric_limits<int>::max();
  int min_y = std::numeric_limits<int>::max();
  int max_x = std::numeric_limits<int>::min();
  int max_y = std::numeric_limits<int>::min();
  for (const NamedRect& r : rects) {
    min_x = std::min(min_x, r.rect.x1);
    min_y = std::min(min_y, r.rect.y1);
    max_x = std::max(max_x, r.rect.x2);
    max_y = std::max(max_y, r.rect.y2);
  }
  for (NamedRect& r : rects) {
    r.rect.x1 -= min_x;
    r.rect.x2 -= min_x;
    r.rect.y1 -= min_y;
    r.rect.y2 -= min_y;
  }
  rep.rects_ = std::move(rects);
  rep.box_ = Rect{0, 0, max_x - min_x, max_y - min_y};
  return rep;
}

absl::StatusOr<int> Representation::IndexOf(std::string_view name) const {
  for (int i = 0; i < size(); ++i) {
    if (rects_[i].name == name) return i;
  }
  return absl::NotFoundError(absl::StrCat("no rectangle named '", std::string(name), "'"));
}

namespace {

// Least free lane for horizontal sight from `left` to `right`, which must
// satisfy left.x2 <= right.x1.
std::optional<int> FreeRow(const Representation& rep, int left, int right) {
  const Rect& a = rep.rect(left);
  const Rect& b = rep.rect(right);
  const int lo = std::max(a.y1, b.y1);
  const int hi = std::min(a.y2, b.y2);
  for (int k = lo; k + 1 <= hi; ++k) {
    bool blocked = false;
    for (int c = 0; c < rep.size() && !blocked; ++c) {
      if (c == left || c == right) continue;
      const Rect& r = rep.rect(c);
      blocked = r.y1 <= k && r.y2 >= k + 1 && r.x2 > a.x2 && r.x1 < b.x1;
    }
    if (!blocked) return k;
  }
  return std::nullopt;
}

// Transpose of FreeRow: vertical sight from `low` up to `high`.
std::optional<int> FreeColumn(const Representation& rep, int low, int high) {
  const Rect& a = rep.rect(low);
  const Rect& b = rep.rect(high);
  const int lo = std::max(a.x1, b.x1);
  const int hi = std::min(a.x2, b.x2);
  for (int k = lo; k + 1 <= hi; ++k) {
    bool blocked = false;
    for (int c = 0; c < rep.size() && !blocked; ++c) {
      if (c == low || c == high) continue;
      const Rect& r = rep.rect(c);
      blocked = r.x1 <= k && r.x2 >= k + 1 && r.y2 > a.y2 && r.y1 < b.y1;
    }
    if (!blocked) return k;
  }
  return std::nullopt;
}

}  // namespace

std::optional<SightEdge> Sees(const Representation& rep, int a, int b) {
  if (a == b) return std::nullopt;
  const Rect& ra = rep.rect(a);
  const Rect& rb = rep.rect(b);
  std::optional<int> lane;
  Orientation orientation = Orientation::kHorizontal;
  if (ra.x2 <= rb.x1) {
    lane = FreeRow(rep, a, b);
  } else if (rb.x2 <= ra.x1) {
    lane = FreeRow(rep, b, a);
  } else if (ra.y2 <= rb.y1) {
    orientation = Orientation::kVertical;
    lane = FreeColumn(rep, a, b);
  } else if (rb.y2 <= ra.y1) {
    orientation = Orientation::kVertical;
    lane = FreeColumn(rep, b, a);
  }
  if (!lane.has_value()) return std::nullopt;
  return SightEdge{std::min(a, b), std::max(a, b), orientation, *lane};
}

absl::StatusOr<std::optional<SightEdge>> Sees(const Representation& rep,
                                              std::string_view a,
                                              std::string_view b) {
  absl::StatusOr<int> ia = rep.IndexOf(a);
  if (!ia.ok()) return ia.status();
  absl::StatusOr<int> ib = rep.IndexOf(b);
  if (!ib.ok()) return ib.status();
  if (*ia == *ib) {
    return absl::InvalidArgumentError("a rectangle does not see itself");
  }
  return Sees(rep, *ia, *ib);
}

TaggedGraph VisibilityGraph(const Representation& rep) {
  TaggedGraph out;
  out.graph = Graph(rep.size());
  std::vector<std::string> labels;
  for (const NamedRect& r : rep.rects()) labels.push_back(r.name);
  out.graph.set_labels(std::move(labels));
  for (int a = 0; a < rep.size(); ++a) {
    for (int b = a + 1; b < rep.size(); ++b) {
      if (std::optional<SightEdge> e = Sees(rep, a, b)) {
        out.graph.AddEdge(a, b);
        out.edges.push_back(*e);
      }
    }
  }
  return out;
}

DirectionalSets Directions(const Representation& rep, int a) {
  DirectionalSets sets;
  const Rect& r = rep.rect(a);
  for (int x = 0; x < rep.size(); ++x) {
    if (x == a) continue;
    const Rect& o = rep.rect(x);
    const bool x_overlap = o.x1 < r.x2 && r.x1 < o.x2;
    const bool y_overlap = o.y1 < r.y2 && r.y1 < o.y2;
    if (x_overlap && o.y1 >= r.y2) sets.north.push_back(x);
    if (x_overlap && o.y2 <= r.y1) sets.south.push_back(x);
    if (y_overlap && o.x1 >= r.x2) sets.east.push_back(x);
    if (y_overlap && o.x2 <= r.x1) sets.west.push_back(x);
  }
  return sets;
}

bool SwapsAxes(Symmetry s) {
  return s == Symmetry::kTranspose || s == Symmetry::kAntiTranspose ||
         s == Symmetry::kRot90 || s == Symmetry::kRot270;
}

Rect TransformRect(const Rect& r, Symmetry s, int u, int v) {
  switch (s) {
    case Symmetry::kIdentity:
      return r;
    case Symmetry::kFlipH:
      return Rect{u - r.x2, r.y1, u - r.x1, r.y2};
    case Symmetry::kFlipV:
      return Rect{r.x1, v - r.y2, r.x2, v - r.y1};
    case Symmetry::kRot180:
      return Rect{u - r.x2, v - r.y2, u - r.x1, v - r.y1};
    case Symmetry::kTranspose:
      return Rect{r.y1, r.x1, r.y2, r.x2};
    case Symmetry::kAntiTranspose:
      return Rect{v - r.y2, u - r.x2, v - r.y1, u - r.x1};
    case Symmetry::kRot90:
      return Rect{v - r.y2, r.x1, v - r.y1, r.x2};
    case Symmetry::kRot270:
      return Rect{r.y1, u - r.x2, r.y2, u - r.x1};
  }
  return r;
}

Representation Transform(const Representation& rep, Symmetry s) {
  std::vector<NamedRect> rects = rep.rects();
  for (NamedRect& r : rects) {
    r.rect = TransformRect(r.rect, s, rep.box_width(), rep.box_height());
  }
  // Images of a valid representation stay valid.
  return *Representation::Create(std::move(rects));
}

Symmetry Inverse(Symmetry s) {
  if (s == Symmetry::kRot90) return Symmetry::kRot270;
  if (s == Symmetry::kRot270) return Symmetry::kRot90;
  return s;
}

}  // namespace rvg
