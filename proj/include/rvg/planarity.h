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

#ifndef RVG_PLANARITY_H_
#define RVG_PLANARITY_H_

#include "absl/status/statusor.h"
#include "rvg/geometry.h"
#include "rvg/graph.h"

namespace rvg {

inline constexpr int kMaxPlanarityVertices = 16;

absl::StatusOr<bool> IsPlanar(const Graph& g);

// Edges of the visibility graph split by the orientation of their sight
// lines. Each part is a bar visibility graph of the representation.
struct DirectionSplit {
  Graph vertical;
  Graph horizontal;
};

DirectionSplit SplitByDirection(const Representation& rep);

}  // namespace rvg

#endif  // RVG_PLANARITY_H_
