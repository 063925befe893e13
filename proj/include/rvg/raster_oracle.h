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

#ifndef RVG_RASTER_ORACLE_H_
#define RVG_RASTER_ORACLE_H_

#include "rvg/geometry.h"
#include "rvg/graph.h"

namespace rvg {

// Visibility graph computed by painting the box into unit cells and scanning
// every cell row and cell column. Shares no code with VisibilityGraph; used to
// cross-check it.
Graph RasterVisibilityGraph(const Representation& rep);

}  // namespace rvg

#endif  // RVG_RASTER_ORACLE_H_
