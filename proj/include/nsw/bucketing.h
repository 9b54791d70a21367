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

// Count-vector guessing over worker classes, shared by the exact bucketing
// solver and the bucketing approximation scheme.
//
// Each firm f partitions the workers into classes ("sub-buckets") via
// class_of[f][w]; -1 marks workers that value f at zero and so can never be
// placed at f in a matching with positive Nash product. A guess fixes, for
// every firm and class, how many workers of that class the firm receives.
// A guess is realizable iff a flow from workers to (firm, class) slots
// fills every slot; the search abandons a prefix of firms as soon as it is
// unrealizable.

#ifndef NSW_BUCKETING_H_
#define NSW_BUCKETING_H_

#include <cstdint>
#include <vector>

#include "absl/status/statusor.h"
#include "nsw/instance.h"
#include "nsw/welfare.h"

namespace nsw {

struct BucketSearchStats {
  int64_t guesses = 0;   // Per-firm count vectors examined.
  int64_t realized = 0;  // Guesses realized and scored exactly.
};

// Returns the best realized matching (a zero solution when no guess with
// positive product is realizable). Complete guesses whose optimistic bound
// (largest values in each class) cannot beat the incumbent are skipped
// without realization, which never loses the optimum of the guesses.
absl::StatusOr<Solution> SolveByClassCounts(
    const Instance& inst, const std::vector<std::vector<int>>& class_of,
    int64_t max_guesses, BucketSearchStats* stats = nullptr);

}  // namespace nsw

#endif  // NSW_BUCKETING_H_
