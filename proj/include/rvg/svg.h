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

#ifndef RVG_SVG_H_
#define RVG_SVG_H_

#include <string>

#include "rvg/geometry.h"

namespace rvg {

struct SvgOptions {
  int cell = 40;             // Pixels per grid unit.
  bool sight_lines = false;  // Draw one witness lane per edge.
};

// Unit grid, labelled rectangles, and optionally the sight lanes. The y axis
// is flipped so that the drawing has the origin at the lower left.
std::string RenderSvg(const Representation& rep, const SvgOptions& options = {});

}  // namespace rvg

#endif  // RVG_SVG_H_
