// Copyright 2026 The Authors.
//
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

// Exhaustive reference solver. This is the ground truth every other solver is
// tested against, so it favors obviously-correct enumeration over speed.

#ifndef NSW_ORACLE_H_
#define NSW_ORACLE_H_

#include <cstdint>
#include <optional>

#include "absl/status/statusor.h"
#include "nsw/instance.h"
#include "nsw/welfare.h"

namespace nsw {

struct OracleResult {
  Matching best;
  NashValue value;
  // Complete assignments scored during the search.
  int64_t num_enumerated = 0;
};

inline constexpr int64_t kDefaultOracleLimit = 50'000'000;

// Maximizes the Nash product over every capacity-feasible assignment.
//
// A nonzero matching matches every worker to a firm it values, so the search
// branches only over such firms and stops extending a branch once some firm is
// full with zero utility. If no complete assignment has a positive product
// the optimum is zero and the empty matching (the lexicographically smallest
// assignment) is returned. Among equal optima the lexicographically smallest
// assignment wins. Returns ResourceExhausted once more than `limit`
// assignments have been scored.
absl::StatusOr<OracleResult> SolveBruteForce(
    const Instance& inst, int64_t limit = kDefaultOracleLimit);

// A matching with positive Nash product, if one exists.
absl::StatusOr<std::optional<Matching>> ExistsNonzeroBruteForce(
    const Instance& inst, int64_t limit = kDefaultOracleLimit);

}  // namespace nsw

#endif  // NSW_ORACLE_H_
