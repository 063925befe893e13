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

// Closed-form lower bounds on the four box parameters, box frontiers, and the
// calculus for disjoint unions.
//
// Boxes are (height, width) with height <= width. A graph "fits" a box when
// it has a representation whose bounding box lies inside it (in either
// orientation), so feasibility is upward closed and a frontier, the set of
// minimal feasible boxes, determines all four parameters.

#ifndef RVG_ANALYSIS_H_
#define RVG_ANALYSIS_H_

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "rvg/geometry.h"
#include "rvg/graph.h"

namespace rvg {

enum class Parameter { kHeight, kWidth, kArea, kPerimeter };

inline constexpr Parameter kAllParameters[] = {
    Parameter::kHeight, Parameter::kWidth, Parameter::kArea,
    Parameter::kPerimeter};

const char* ParameterName(Parameter p);
absl::StatusOr<Parameter> ParseParameter(std::string_view text);

struct Box {
  int height = 0;
  int width = 0;

  // Orders the sides so that height <= width.
  static Box Normalized(int a, int b);
  int area() const { return height * width; }
  int perimeter() const { return 2 * (height + width); }
  // Value of parameter p for this box.
  int Value(Parameter p) const;
  // True iff a representation in this box also fits `outer`.
  bool FitsIn(const Box& outer) const;

  friend bool operator==(const Box&, const Box&) = default;
  friend auto operator<=>(const Box&, const Box&) = default;
};

// Exact integer helpers: ceil(sqrt(n)) and floor(sqrt(n) + 1/2).
int CeilSqrt(int n);
int RoundSqrt(int n);

struct ParamBounds {
  int height_lb = 0;
  int width_lb = 0;
  int area_lb = 0;
  int perimeter_lb = 0;
};

absl::StatusOr<ParamBounds> LowerBounds(int n);

// Boxes h <= w with h + w = RoundSqrt(n) + CeilSqrt(n) and h * w >= n.
std::vector<Box> PerimeterEqualityBoxes(int n);

struct FrontierBox {
  Box box;
  // False when a smaller box could not be excluded within the caps.
  bool proven = true;
  std::optional<Representation> witness;
};

struct BoxFrontier {
  std::string graph_id;  // Canonical graph6.
  std::vector<FrontierBox> boxes;  // Increasing height, decreasing width.
  int max_width = 0;  // Widest box examined.
  // True iff `boxes` is the full set of minimal boxes with every entry proven.
  bool complete = true;
};

// Frontier of E_n, {(n, n)}, with a diagonal witness.
BoxFrontier EmptyGraphFrontier(int n);

// A frontier value that may be only an upper bound.
struct ParamValue {
  int value = 0;
  bool proven = false;
  Box box;  // A box attaining the value.
};

struct ComposedValue {
  ParamValue result;
  Box first;   // Box used for the first graph.
  Box second;  // Box used for the second graph, as oriented in the union.
  std::optional<Representation> witness;
};

struct Composition {
  std::array<ComposedValue, 4> values;  // Indexed by Parameter.
};

// Best value of each parameter over the boxes of a frontier.
std::array<ParamValue, 4> ParametersFromFrontier(const BoxFrontier& f);

// Places S2 (or its transpose) so that its lower-left corner meets the
// upper-right corner of S1. Rectangle names of S2 that clash get primes.
Representation Glue(const Representation& s1, const Representation& s2,
                    bool transpose_second);

// Parameters of the disjoint union, minimizing over both orientations of
// every pair of frontier boxes. Values are proven iff both frontiers are
// complete.
absl::StatusOr<Composition> ComposeDisjoint(const BoxFrontier& h,
                                            const BoxFrontier& j);

// Frontier of the disjoint union: the minimal glued boxes.
BoxFrontier ComposeFrontiers(const BoxFrontier& h, const BoxFrontier& j);

struct UnionBounds {
  int width_ub = 0;
  int area_ub = 0;
};

UnionBounds UnionUpperBounds(int width_h, int width_j);

struct QK8Prediction {
  int q = 0;
  int r = 0;
  int height = 0;
  int width = 0;
  int area = 0;
  int perimeter = 0;
};

// Closed forms for q copies of K8 plus r isolated vertices, n = 8q + r.
absl::StatusOr<QK8Prediction> QK8Construction(int n);

// The same values obtained by composing frontiers: K8's frontier {(10,10)}
// q times and E_r's.
absl::StatusOr<QK8Prediction> QK8ByComposition(int n);

struct SameBoxCertificate {
  int area = 0;
  int perimeter = 0;
};

// When `rep` represents g in a box whose sides equal the proven height and
// width, the same box also realizes area and perimeter.
std::optional<SameBoxCertificate> SameBoxShortcut(const Graph& g,
                                                  const Representation& rep,
                                                  int proven_height,
                                                  int proven_width);

struct CharacterizationReport {
  bool height_is_one = false;
  bool is_path = false;
  bool area_is_n = false;
  bool is_grid = false;
  bool width_at_bound = false;
  bool fits_square_bound = false;
  bool perimeter_at_bound = false;
  bool fits_perimeter_box = false;
  bool consistent() const {
    return height_is_one == is_path && area_is_n == is_grid &&
           width_at_bound == fits_square_bound &&
           perimeter_at_bound == fits_perimeter_box;
  }
};

// Checks the four equality characterizations against proven optima and the
// frontier. Fails with Internal when any of them disagrees.
absl::StatusOr<CharacterizationReport> EqualityCharacterizations(
    const Graph& g, const std::array<ParamValue, 4>& optima,
    const BoxFrontier& frontier);

}  // namespace rvg

#endif  // RVG_ANALYSIS_H_
