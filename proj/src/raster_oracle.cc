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

#include "rvg/raster_oracle.h"

#include <vector>

namespace rvg {

Graph RasterVisibilityGraph(const Representation& rep) {
  const int w = rep.box_width();
  const int h = rep.box_height();
  std::vector<int> cell(static_cast<size_t>(w) * h, -1);
  for (int i = 0; i < rep.size(); ++i) {
    const Rect& r = rep.rect(i);
    for (int y = r.y1; y < r.y2; ++y) {
      for (int x = r.x1; x < r.x2; ++x) cell[y * w + x] = i;
    }
  }
  Graph g(rep.size());
  // Consecutive distinct owners along a scan line, with only empty cells in
  // between, see each other.
  auto scan = [&](int start, int stride, int count) {
    int last = -1;
    for (int t = 0; t < count; ++t) {
      const int owner = cell[start + t * stride];
      if (owner < 0) continue;
      if (last >= 0 && owner != last) g.AddEdge(last, owner);
      last = owner;
    }
  };
  for (int y = 0; y < h; ++y) scan(y * w, 1, w);
  for (int x = 0; x < w; ++x) scan(x, w, h);
  return g;
}

}  // namespace rvg
