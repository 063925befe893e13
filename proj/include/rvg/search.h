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

// Box feasibility, parameter minimization, frontiers and the complete-graph
// solver, all on top of the placement kernel.
//
// Every layout can be squeezed until no two adjacent rows or columns are
// equal and none is empty; a squeezed layout of n rectangles has at most
// 2n - 1 rows and columns, because each interior grid line must carry a
// rectangle side. Searches whose width cap reaches 2n - 1 are therefore
// complete and their negative answers are proofs.

#ifndef RVG_SEARCH_H_
#define RVG_SEARCH_H_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "rvg/analysis.h"
#include "rvg/cache.h"
#include "rvg/geometry.h"
#include "rvg/graph.h"

namespace rvg {

struct SearchConfig {
  int max_width = 0;  // 0 selects DefaultMaxWidth(n).
  int max_area = 0;   // 0 selects the square of the width cap.
  double time_budget_seconds = 60;  // Per box; <= 0 disables.
  int64_t node_budget = 0;          // Per box; 0 disables.
  int jobs = 1;
  bool degree_perimeter = true;
  bool monotone_edge = true;
  bool canonical_leaves = true;
  bool component_boxes = true;  // Speed only; verdicts do not depend on it.
  ResultsCache* cache = nullptr;  // Not owned; may be null.

  // Identifies every setting that can change a verdict or a witness.
  std::string Fingerprint() const;
};

// max(n, 2 * CeilSqrt(n) + 2, 2n - 1).
int DefaultMaxWidth(int n);

// Width up to which squeezed layouts of n rectangles can extend.
inline int CompleteWidth(int n) { return n <= 1 ? 1 : 2 * n - 1; }

enum class Verdict { kFeasible, kInfeasible, kUnknown };
const char* VerdictName(Verdict v);

struct BoxResult {
  Box box;
  bool exact = false;  // Bounding box must be exactly `box` (squeezed form).
  Verdict verdict = Verdict::kUnknown;
  // Fits box.height x box.width; rectangle i is vertex i of the input graph.
  std::optional<Representation> witness;
  int64_t nodes = 0;
  int64_t prunes = 0;
  double seconds = 0;
  bool cached = false;
};

// Does `g` have a representation inside an h x w box (either orientation)?
absl::StatusOr<BoxResult> DecideFeasible(const Graph& g, int h, int w,
                                         const SearchConfig& cfg);

// Squeezed layouts whose bounding box is exactly h x w. Used when every
// smaller box has already been ruled out.
absl::StatusOr<BoxResult> DecideExactBox(const Graph& g, int h, int w,
                                         const SearchConfig& cfg);

enum class ReportStatus { kProven, kUpperBoundOnly, kInfeasibleUpTo };
const char* ReportStatusName(ReportStatus s);

struct SearchReport {
  std::string graph_id;  // Canonical graph6.
  int n = 0;
  Parameter parameter = Parameter::kHeight;
  ReportStatus status = ReportStatus::kInfeasibleUpTo;
  int value = 0;  // Meaningful unless kInfeasibleUpTo.
  std::optional<Representation> witness;
  std::vector<BoxResult> boxes;  // In the order examined; witnesses dropped.
  int max_width = 0;
  int max_area = 0;
  int64_t nodes = 0;
  int64_t prunes = 0;
  double seconds = 0;
};

absl::StatusOr<SearchReport> Minimize(const Graph& g, Parameter p,
                                      const SearchConfig& cfg);

absl::StatusOr<BoxFrontier> ComputeFrontier(const Graph& g,
                                            const SearchConfig& cfg,
                                            std::vector<BoxResult>* log = nullptr);

// Representation of K_n inside exactly h x w with the four-strip boundary
// fixed; equivalent to DecideFeasible(K_n, h, w). Needs 6 <= n <= 8.
absl::StatusOr<BoxResult> SolveComplete(int n, int h, int w,
                                        const SearchConfig& cfg);

// Visits K_n representations found by the complete-graph solver in h x w,
// up to `limit` of them.
absl::StatusOr<std::vector<Representation>> SampleComplete(int n, int h, int w,
                                                           int limit);

// Visits representations of g in squeezed form inside h x w.
absl::StatusOr<std::vector<Representation>> SampleRepresentations(
    const Graph& g, int h, int w, int limit);

struct CatalogEntry {
  std::string input;     // As given (graph6).
  std::string graph_id;  // Canonical graph6.
  int n = 0;
  BoxFrontier frontier;
  std::array<ParamValue, 4> values{};
  std::array<std::optional<Representation>, 4> witnesses;
};

absl::StatusOr<CatalogEntry> CatalogOne(const Graph& g, const std::string& input,
                                        const SearchConfig& cfg);

// Deterministic JSON renderings. Wall-clock fields appear only when
// `with_timing` is set.
std::string ReportToJson(const SearchReport& r, bool with_timing);
std::string FrontierToJson(const BoxFrontier& f);
std::string CatalogEntryToJson(const CatalogEntry& e);

}  // namespace rvg

#endif  // RVG_SEARCH_H_
