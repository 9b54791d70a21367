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

// Exact Nash-optimal solvers.

#ifndef NSW_EXACT_H_
#define NSW_EXACT_H_

#include <cstdint>
#include <vector>

#include "absl/status/statusor.h"
#include "nsw/instance.h"
#include "nsw/welfare.h"

namespace nsw {

struct ExactOptions {
  // Subset DP tables have 2^m entries per firm.
  int max_dp_workers = 20;
  // Largest capacity accepted by the bounded-capacity DP.
  int max_dp2_capacity = 4;
  // Domain of the exact bucketing solver.
  int max_bucket_firms = 4;
  int max_distinct_values = 6;
  // Count-vector guesses examined before giving up.
  int64_t max_guesses = 5'000'000;
};

// Every firm has capacity one: a maximum-weight worker-saturating bipartite
// matching on the pairs valued positively by both sides, with exact weights
// ln(v_{w,f} * v_{f,w}). A zero optimum (no such matching, or a firm left
// empty) is reported as a zero solution. FailedPrecondition if some
// capacity differs from one.
absl::StatusOr<Solution> SolveCapacityOne(const Instance& inst);

// T[i][S]: the largest Nash product of the first i+1 firms' bundles when
// exactly the workers in S are placed among them. choice[i][S] is the
// bundle given to firm i in an optimal split (0 when T[i][S] is zero).
struct DPTable {
  std::vector<std::vector<BigInt>> value;
  std::vector<std::vector<uint32_t>> choice;
};

// Dense subset DP over all S' subset of S (3^m per firm). ResourceExhausted
// when m exceeds the budget.
absl::StatusOr<DPTable> BuildDPTable(const Instance& inst,
                                     const ExactOptions& options = {});

absl::StatusOr<Solution> SolveDP(const Instance& inst,
                                 const ExactOptions& options = {});

// Same recurrence, but the inner maximization enumerates only bundles of size
// at most c_i directly. FailedPrecondition when a capacity exceeds the bound.
absl::StatusOr<Solution> SolveDPBoundedCapacity(const Instance& inst,
                                                const ExactOptions& options = {});

// Guesses, for every firm and every (worker value, firm value) class of
// workers, how many workers of that class the firm receives; each guess is
// checked for realizability by a flow and scored exactly.
// FailedPrecondition outside the domain (too many firms or distinct values),
// ResourceExhausted past the guess budget.
absl::StatusOr<Solution> SolveExactBucketing(const Instance& inst,
                                             const ExactOptions& options = {});

}  // namespace nsw

#endif  // NSW_EXACT_H_
