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

#include "rvg/transforms.h"

#include <algorithm>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "rvg/canonical.h"

namespace rvg {

namespace {

bool IsComplete(const Graph& g) {
  const int n = g.num_vertices();
  return g.num_edges() == n * (n - 1) / 2;
}

// Rotation that carries `side` to the top of the box.
Symmetry ToTop(Side side) {
  switch (side) {
    case Side::kTop:
      return Symmetry::kIdentity;
    case Side::kRight:
      return Symmetry::kRot90;
    case Side::kBottom:
      return Symmetry::kRot180;
    case Side::kLeft:
      return Symmetry::kRot270;
  }
  return Symmetry::kIdentity;
}

}  // namespace

absl::StatusOr<std::vector<int>> TopSet(const Representation& rep) {
  if (rep.empty()) {
    return absl::InvalidArgumentError("top set of an empty representation");
  }
  int best = rep.rect(0).y1;
  for (const NamedRect& r : rep.rects()) best = std::max(best, r.rect.y1);
  std::vector<int> top;
  for (int i = 0; i < rep.size(); ++i) {
    if (rep.rect(i).y1 == best) top.push_back(i);
  }
  return top;
}

absl::StatusOr<Representation> ExtractUp(const Representation& rep, int a,
                                         ExtractMode mode) {
  if (rep.size() < 2) {
    return absl::InvalidArgumentError("extraction needs at least 2 rectangles");
  }
  if (a < 0 || a >= rep.size()) {
    return absl::InvalidArgumentError("rectangle index out of range");
  }
  absl::StatusOr<std::vector<int>> top = TopSet(rep);
  if (!top.ok()) return top.status();
  if (top->size() != 1 || (*top)[0] != a) {
    return absl::FailedPreconditionError(absl::StrCat(
        "top set has ", top->size(), " member(s); extraction needs exactly '",
        rep.name(a), "'"));
  }
  if (mode == ExtractMode::kChecked && !IsComplete(VisibilityGraph(rep).graph)) {
    return absl::FailedPreconditionError(
        "checked extraction requires a complete visibility graph");
  }
  const int u = rep.box_width();
  const int v = rep.box_height();
  std::vector<NamedRect> rects = rep.rects();
  for (int i = 0; i < rep.size(); ++i) {
    Rect& r = rects[i].rect;
    if (i == a) {
      r = Rect{0, v - 1, u, v};
    } else {
      r.y2 = std::min(r.y2, v - 1);
    }
  }
  absl::StatusOr<Representation> out = Representation::Create(std::move(rects));
  if (!out.ok()) return out.status();
  if (mode == ExtractMode::kChecked) {
    if (out->box_width() != u || out->box_height() != v ||
        !IsComplete(VisibilityGraph(*out).graph)) {
      return absl::InternalError("extraction broke completeness or the box");
    }
  }
  return out;
}

absl::StatusOr<Representation> ExtractToward(const Representation& rep,
                                             Side side, ExtractMode mode) {
  const Symmetry s = ToTop(side);
  Representation turned = Transform(rep, s);
  absl::StatusOr<std::vector<int>> top = TopSet(turned);
  if (!top.ok()) return top.status();
  if (top->size() != 1) {
    return absl::FailedPreconditionError(absl::StrCat(
        "extremal set toward the chosen side has ", top->size(), " members"));
  }
  absl::StatusOr<Representation> done = ExtractUp(turned, (*top)[0], mode);
  if (!done.ok()) return done.status();
  return Transform(*done, Inverse(s));
}

absl::StatusOr<NormalizedBoundary> NormalizeBoundary(const Representation& rep) {
  Representation current = rep;
  NormalizedBoundary result;
  const Side order[] = {Side::kTop, Side::kRight, Side::kBottom, Side::kLeft};
  for (Side side : order) {
    absl::StatusOr<Representation> next =
        ExtractToward(current, side, ExtractMode::kChecked);
    if (!next.ok()) return next.status();
    current = *std::move(next);
  }
  const int u = current.box_width();
  const int v = current.box_height();
  const Rect expected[] = {Rect{1, v - 1, u - 1, v}, Rect{u - 1, 1, u, v},
                           Rect{1, 0, u, 1}, Rect{0, 0, 1, v}};
  for (int s = 0; s < 4; ++s) {
    result.strips[s] = -1;
    for (int i = 0; i < current.size(); ++i) {
      if (current.rect(i) == expected[s]) result.strips[s] = i;
    }
    if (result.strips[s] < 0) {
      return absl::InternalError("normalized strips not where expected");
    }
  }
  result.rep = std::move(current);
  return result;
}

bool BoundaryCoveredByFourStrips(const Representation& rep) {
  const int u = rep.box_width();
  const int v = rep.box_height();
  std::vector<int> touching;
  for (int i = 0; i < rep.size(); ++i) {
    const Rect& r = rep.rect(i);
    if (r.x1 == 0 || r.y1 == 0 || r.x2 == u || r.y2 == v) touching.push_back(i);
  }
  if (touching.size() != 4) return false;
  for (int i : touching) {
    if (rep.rect(i).width() != 1 && rep.rect(i).height() != 1) return false;
  }
  auto covered = [&](int x, int y) {  // Unit boundary cell (x, y).
    for (int i : touching) {
      const Rect& r = rep.rect(i);
      if (r.x1 <= x && x < r.x2 && r.y1 <= y && y < r.y2) return true;
    }
    return false;
  };
  for (int x = 0; x < u; ++x) {
    if (!covered(x, 0) || !covered(x, v - 1)) return false;
  }
  for (int y = 0; y < v; ++y) {
    if (!covered(0, y) || !covered(u - 1, y)) return false;
  }
  return true;
}

namespace {

// Deletes unit row (index, index+1) or the analogous column; nullopt if a
// rectangle would collapse.
std::optional<Representation> DeleteLine(const Representation& rep,
                                         bool is_row, int index) {
  std::vector<NamedRect> rects = rep.rects();
  for (NamedRect& nr : rects) {
    int& lo = is_row ? nr.rect.y1 : nr.rect.x1;
    int& hi = is_row ? nr.rect.y2 : nr.rect.x2;
    if (lo > index) --lo;
    if (hi > index) --hi;
    if (lo >= hi) return std::nullopt;
  }
  absl::StatusOr<Representation> out = Representation::Create(std::move(rects));
  if (!out.ok()) return std::nullopt;
  return *std::move(out);
}

}  // namespace

CompressResult Compress(const Representation& rep) {
  CompressResult result{rep, {}};
  const Graph target = VisibilityGraph(rep).graph;
  bool progress = true;
  while (progress) {
    progress = false;
    for (bool is_row : {true, false}) {
      int index = 0;
      while (index < (is_row ? result.rep.box_height() : result.rep.box_width())) {
        std::optional<Representation> candidate =
            DeleteLine(result.rep, is_row, index);
        bool keep = false;
        if (candidate.has_value()) {
          const Graph g = VisibilityGraph(*candidate).graph;
          if (g == target) {
            keep = true;
          } else if (g.num_edges() == target.num_edges()) {
            absl::StatusOr<bool> iso = Isomorphic(g, target);
            keep = iso.ok() && *iso;
          }
        }
        if (keep) {
          result.rep = *std::move(candidate);
          result.removed.push_back(RemovedLine{is_row, index});
          progress = true;
        } else {
          ++index;
        }
      }
    }
  }
  return result;
}

}  // namespace rvg
