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

// Integral maximum flow (Dinic) and feasible flow with lower bounds.

#ifndef NSW_GRAPH_FLOW_H_
#define NSW_GRAPH_FLOW_H_

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "absl/status/statusor.h"

namespace nsw {

using FlowQuantity = int64_t;
inline constexpr FlowQuantity kInfiniteCapacity =
    std::numeric_limits<FlowQuantity>::max() / 4;

class MaxFlow {
 public:
  explicit MaxFlow(int num_nodes);

  int num_nodes() const { return static_cast<int>(head_.size()); }
  int AddNode();
  // Returns an index usable with Flow().
  int AddArc(int from, int to, FlowQuantity capacity);

  // Augments from the current flow; repeated calls continue where the last
  // one stopped, so callers may add arcs between calls.
  FlowQuantity Solve(int source, int sink);
  FlowQuantity Flow(int arc) const { return flow_[2 * arc]; }
  int num_arcs() const { return static_cast<int>(to_.size() / 2); }

 private:
  bool BuildLevels(int source, int sink);
  FlowQuantity Push(int node, int sink, FlowQuantity limit);

  std::vector<int> head_;
  std::vector<int> next_, to_;
  std::vector<FlowQuantity> cap_, flow_;
  std::vector<int> level_, cursor_;
};

struct BoundedArc {
  int from = 0;
  int to = 0;
  FlowQuantity lower = 0;
  FlowQuantity upper = 0;
};

// A circulation problem: every node conserves flow. Add an arc from sink to
// source with an infinite upper bound to express an s-t flow.
class LowerBoundNetwork {
 public:
  explicit LowerBoundNetwork(int num_nodes) : num_nodes_(num_nodes) {}

  int AddNode() { return num_nodes_++; }
  // InvalidArgument when lower > upper, lower < 0, or an endpoint is out of
  // range.
  absl::StatusOr<int> AddArc(int from, int to, FlowQuantity lower,
                             FlowQuantity upper);

  int num_nodes() const { return num_nodes_; }
  const std::vector<BoundedArc>& arcs() const { return arcs_; }

 private:
  int num_nodes_;
  std::vector<BoundedArc> arcs_;
};

// An integral circulation meeting every bound, indexed like arcs(), or
// nullopt if none exists. Uses the excess/deficit transformation: lower
// bounds are pre-routed and a max flow from a super source must saturate
// every imbalance.
std::optional<std::vector<FlowQuantity>> FindFeasibleCirculation(
    const LowerBoundNetwork& network);

}  // namespace nsw

#endif  // NSW_GRAPH_FLOW_H_
