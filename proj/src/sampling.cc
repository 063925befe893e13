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

#include "rvg/sampling.h"

#include <algorithm>
#include <vector>

namespace rvg {

Representation RandomRepresentation(std::mt19937_64& rng, int max_rects,
                                    int max_side) {
  std::uniform_int_distribution<int> count(1, std::max(1, max_rects));
  std::uniform_int_distribution<int> coord(0, max_side - 1);
  const int want = count(rng);
  std::vector<NamedRect> rects;
  for (int attempt = 0; attempt < 50 * want && static_cast<int>(rects.size()) < want;
       ++attempt) {
    const int x1 = coord(rng), y1 = coord(rng);
    const int x2 = std::uniform_int_distribution<int>(x1 + 1, max_side)(rng);
    const int y2 = std::uniform_int_distribution<int>(y1 + 1, max_side)(rng);
    const Rect r{x1, y1, x2, y2};
    const bool clash = std::any_of(rects.begin(), rects.end(), [&](const NamedRect& o) {
      return InteriorsOverlap(o.rect, r);
    });
    if (!clash) {
      rects.push_back(NamedRect{DefaultVertexName(static_cast<int>(rects.size())), r});
    }
  }
  return *Representation::Create(std::move(rects));
}

}  // namespace rvg
