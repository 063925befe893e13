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

// Integer rectangles, rectangle visibility representations, and the exact
// visibility relation between them.
//
// A rectangle [x1,x2] x [y1,y2] is closed with integer corners. Two rectangles
// see each other horizontally when some open unit row (k, k+1) lies inside
// both y-ranges and no third closed rectangle covers that row strictly between
// them; vertical sight is the transpose. With integer data this is exactly the
// "line of sight of positive width" relation: the free part of the open
// y-overlap is a union of open integer intervals, so a strip of positive width
// exists iff a whole unit row is free.

#ifndef RVG_GEOMETRY_H_
#define RVG_GEOMETRY_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "rvg/graph.h"

namespace rvg {

struct Rect {
  int x1 = 0;
  int y1 = 0;
  int x2 = 0;
  int y2 = 0;

  int width() const { return x2 - x1; }
  int height() const { return y2 - y1; }
  int area() const { return width() * height(); }
  bool IsWellFormed() const { return x1 < x2 && y1 < y2; }

  friend bool operator==(const Rect&, const Rect&) = default;
};

// True iff the open interiors intersect.
bool InteriorsOverlap(const Rect& a, const Rect& b);

struct NamedRect {
  std::string name;
  Rect rect;

  friend bool operator==(const NamedRect&, const NamedRect&) = default;
};

struct ValidationIssue {
  enum class Kind { kMalformedRect, kDuplicateName, kInteriorOverlap };
  Kind kind;
  std::string first;
  std::string second;  // Empty for kMalformedRect.
};

// First invariant violation in scan order, or nullopt when the rectangles form
// a valid representation. Pairs are scanned (i, j) with i < j.
std::optional<ValidationIssue> FindValidationIssue(
    std::span<const NamedRect> rects);

// Same check surfaced as a status; the message names the offending pair.
absl::Status Validate(std::span<const NamedRect> rects);

// A validated set of named rectangles, translated so that its bounding box
// has its lower-left corner at the origin. Immutable once built.
class Representation {
 public:
  // Validates and normalizes. An empty list yields the empty representation
  // with a degenerate 0x0 box.
  static absl::StatusOr<Representation> Create(std::vector<NamedRect> rects);

  Representation() = default;

  int size() const { return static_cast<int>(rects_.size()); }
  bool empty() const { return rects_.empty(); }
  const NamedRect& operator[](int i) const { return rects_[i]; }
  const std::vector<NamedRect>& rects() const { return rects_; }
  const Rect& rect(int i) const { return rects_[i].rect; }
  const std::string& name(int i) const { return rects_[i].name; }

  // Index of the rectangle called `name`, or NotFound.
  absl::StatusOr<int> IndexOf(std::string_view name) const;

  const Rect& box() const { return box_; }
  int box_width() const { return box_.x2; }
  int box_height() const { return box_.y2; }

  friend bool operator==(const Representation& a, const Representation& b) {
    return a.rects_ == b.rects_;
  }

 private:
  std::vector<NamedRect> rects_;
  Rect box_;
};

enum class Orientation { kHorizontal, kVertical };

// One edge of the visibility graph, with the least unobstructed lane as its
// witness. `lane` = k names the open row (k, k+1) for horizontal sight, or the
// open column (k, k+1) for vertical sight.
struct SightEdge {
  int a = 0;
  int b = 0;
  Orientation orientation = Orientation::kHorizontal;
  int lane = 0;

  friend bool operator==(const SightEdge&, const SightEdge&) = default;
};

// Sight between rectangles a != b (indices), or nullopt.
std::optional<SightEdge> Sees(const Representation& rep, int a, int b);
absl::StatusOr<std::optional<SightEdge>> Sees(const Representation& rep,
                                              std::string_view a,
                                              std::string_view b);

struct TaggedGraph {
  Graph graph;                   // Vertex i is rectangle i; labels are names.
  std::vector<SightEdge> edges;  // One entry per edge, a < b, sorted.
};

TaggedGraph VisibilityGraph(const Representation& rep);

struct DirectionalSets {
  std::vector<int> north;
  std::vector<int> south;
  std::vector<int> east;
  std::vector<int> west;
};

// Rectangles lying entirely above/below/right/left of rectangle `a` with an
// open overlap in the other axis. Membership does not imply sight.
DirectionalSets Directions(const Representation& rep, int a);

// Elements of the dihedral group of the bounding box. kTranspose maps
// (x, y) -> (y, x); kRot90 is a quarter turn counter-clockwise.
enum class Symmetry {
  kIdentity,
  kFlipH,  // Mirror left-right.
  kFlipV,  // Mirror top-bottom.
  kRot180,
  kTranspose,
  kAntiTranspose,
  kRot90,
  kRot270,
};

inline constexpr Symmetry kAllSymmetries[] = {
    Symmetry::kIdentity,  Symmetry::kFlipH,         Symmetry::kFlipV,
    Symmetry::kRot180,    Symmetry::kTranspose,     Symmetry::kAntiTranspose,
    Symmetry::kRot90,     Symmetry::kRot270};

// True for the four elements that exchange the axes.
bool SwapsAxes(Symmetry s);

Rect TransformRect(const Rect& r, Symmetry s, int box_width, int box_height);
Representation Transform(const Representation& rep, Symmetry s);
Symmetry Inverse(Symmetry s);

}  // namespace rvg

#endif  // RVG_GEOMETRY_H_
