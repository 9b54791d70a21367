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

// Polynomial-time test for the existence of a matching with positive Nash
// product.

#ifndef NSW_FEASIBILITY_H_
#define NSW_FEASIBILITY_H_

#include <optional>

#include "nsw/instance.h"

namespace nsw {

// A matching with positive Nash product exists iff every worker can be sent
// to a firm it values while every firm receives at least one worker it
// values, within capacities. That is a flow problem with lower bounds; any
// feasible integral flow is returned as the witness, in which every worker is
// matched to a positively valued firm and every firm holds a positively
// valued worker. Depends only on the positivity pattern of the valuations.
std::optional<Matching> ExistsNonzeroNash(const Instance& inst);

}  // namespace nsw

#endif  // NSW_FEASIBILITY_H_
