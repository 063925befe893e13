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

// The published-claims suite. Each claim recomputes its statement from
// scratch (searches, fixtures, closed forms) and reports one of
//
//   verified         every part was checked exhaustively;
//   verified-capped  nothing contradicts the claim, but some part was only
//                    checked up to a width cap or a time budget;
//   skipped          not run;
//   failed           some part contradicts the claim.

#ifndef RVG_VERIFY_H_
#define RVG_VERIFY_H_

#include <cstdint>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "rvg/fixtures.h"
#include "rvg/search.h"

namespace rvg {

enum class ClaimStatus { kVerified, kVerifiedCapped, kSkipped, kFailed };
const char* ClaimStatusName(ClaimStatus s);

struct ClaimResult {
  std::string id;
  std::string anchor;  // Where the statement appears, in words.
  ClaimStatus status = ClaimStatus::kSkipped;
  std::vector<std::string> details;
  // Deterministic JSON with the reports and witnesses the claim produced.
  std::string evidence;
  double seconds = 0;
};

struct VerifyOptions {
  SearchConfig search;
  // Width caps for the complete-graph height checks; 0 uses the search
  // config's cap (or the default for the graph).
  int k7_height_width = 0;
  int k8_height_width = 0;
  int oracle_samples = 10000;
  int extraction_samples = 1000;
  uint64_t seed = 1;
  // Second worker count for the determinism claim.
  int determinism_jobs = 4;
  std::string fixture_dir;  // Empty selects DefaultFixtureDir().
  // Claims run concurrently on this many threads; the report order and
  // content do not depend on it.
  int claim_jobs = 1;
};

// Claim ids in suite order.
const std::vector<std::string>& ClaimIds();

absl::StatusOr<ClaimResult> RunClaim(const std::string& id,
                                     const VerifyOptions& options);

struct VerificationReport {
  std::vector<ClaimResult> claims;
};

// Runs the claims named in `filter` (all when empty), in suite order.
absl::StatusOr<VerificationReport> VerifyClaims(
    const std::vector<std::string>& filter, const VerifyOptions& options);

std::string VerificationReportToJson(const VerificationReport& report,
                                     bool with_timing);

// 0 when every claim run is verified, 2 if any failed, otherwise 3.
int VerificationExitCode(const VerificationReport& report);

}  // namespace rvg

#endif  // RVG_VERIFY_H_
