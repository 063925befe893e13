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

// Surgery on representations of complete graphs (top sets, extraction to a
// boundary strip, four-strip boundary normalization) and row/column
// compression.

#ifndef RVG_TRANSFORMS_H_
#define RVG_TRANSFORMS_H_

#include <array>
#include <vector>

#include "absl/status/statusor.h"
#include "rvg/geometry.h"

namespace rvg {

// Indices of the rectangles whose lower edge y1 is maximal.
absl::StatusOr<std::vector<int>> TopSet(const Representation& rep);

enum class ExtractMode {
  // Rejects inputs whose visibility graph is not complete; on success the
  // output still represents the complete graph in the same box.
  kChecked,
  // Any representation with a singleton top set; output is only guaranteed
  // to be valid.
  kUnchecked,
};

// Moves rectangle `a`, which must be the unique top rectangle, to the full
// top row [0,u] x [v-1,v] and cuts every other rectangle at y = v-1.
// Requires at least two rectangles.
absl::StatusOr<Representation> ExtractUp(const Representation& rep, int a,
                                         ExtractMode mode = ExtractMode::kChecked);

enum class Side { kTop, kRight, kBottom, kLeft };

// ExtractUp conjugated by the rotation that brings `side` to the top; the
// extracted rectangle is the unique one extremal toward that side.
absl::StatusOr<Representation> ExtractToward(
    const Representation& rep, Side side,
    ExtractMode mode = ExtractMode::kChecked);

struct NormalizedBoundary {
  Representation rep;
  // Strip rectangle on each side, indexed by Side.
  std::array<int, 4> strips;
};

// Extracts toward top, right, bottom, left in that order. Afterwards the
// top strip is [1,u-1]x[v-1,v], the right strip [u-1,u]x[1,v], the bottom
// strip [1,u]x[0,1] and the left strip [0,1]x[0,v]; every other rectangle
// lies in [1,u-1]x[1,v-1].
absl::StatusOr<NormalizedBoundary> NormalizeBoundary(const Representation& rep);

// True iff exactly four rectangles touch the box boundary, each has width or
// height 1, and together they cover the whole boundary.
bool BoundaryCoveredByFourStrips(const Representation& rep);

struct RemovedLine {
  bool is_row = true;
  int index = 0;  // Row (y, y+1) or column (x, x+1) at the time of removal.
};

struct CompressResult {
  Representation rep;
  std::vector<RemovedLine> removed;
};

// Greedily deletes unit rows (bottom-up) and then unit columns (left-right)
// whenever the result keeps every rectangle and an isomorphic visibility
// graph; repeats until no deletion applies.
CompressResult Compress(const Representation& rep);

}  // namespace rvg

#endif  // RVG_TRANSFORMS_H_
