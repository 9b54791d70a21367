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

#include "nsw/graph/flow.h"

#include <algorithm>
#include <queue>
#include <tuple>

#include "absl/strings/str_cat.h"

namespace nsw {

MaxFlow::MaxFlow(int num_nodes) : head_(num_nodes, -1) {}

int MaxFlow::AddNode() {
  head_.push_back(-1);
  return num_nodes() - 1;
}

int MaxFlow::AddArc(int from, int to, FlowQuantity capacity) {
  const int id = num_arcs();
  for (auto [u, v, c] : {std::tuple{from, to, capacity}, std::tuple{to, from, FlowQuantity{0}}}) {
    next_.push_back(head_[u]);
    head_[u] = static_cast<int>(to_.size());
    to_.push_back(v);
    cap_.push_back(c);
    flow_.push_back(0);
  }
  return id;
}

bool MaxFlow::BuildLevels(int source, int sink) {
  level_.assign(num_nodes(), -1);
  std::queue<int> q;
  level_[source] = 0;
  q.push(source);
  while (!q.empty()) {
    const int u = q.front();
    q.pop();
    for (int e = head_[u]; e != -1; e = next_[e]) {
      if (level_[to_[e]] < 0 && flow_[e] < cap_[e]) {
        level_[to_[e]] = level_[u] + 1;
        q.push(to_[e]);
      }
    }
  }
  return level_[sink] >= 0;
}

FlowQuantity MaxFlow::Push(int node, int sink, FlowQuantity limit) {
  if (node == sink) return limit;
  for (int& e = cursor_[node]; e != -1; e = next_[e]) {
    const int v = to_[e];
    if (level_[v] != level_[node] + 1 || flow_[e] == cap_[e]) continue;
    const FlowQuantity pushed = Push(v, sink, std::min(limit, cap_[e] - flow_[e]));
    if (pushed > 0) {
      flow_[e] += pushed;
      flow_[e ^ 1] -= pushed;
      return pushed;
    }
  }
  return 0;
}

FlowQuantity MaxFlow::Solve(int source, int sink) {
  FlowQuantity total = 0;
  while (BuildLevels(source, sink)) {
    cursor_ = head_;
    while (FlowQuantity f = Push(source, sink, kInfiniteCapacity)) total += f;
  }
  return total;
}

absl::StatusOr<int> LowerBoundNetwork::AddArc(int from, int to,
                                              FlowQuantity lower,
                                              FlowQuantity upper) {
  if (from < 0 || from >= num_nodes_ || to < 0 || to >= num_nodes_) {
    return absl::InvalidArgumentError("arc endpoint out of range");
  }
  if (lower < 0 || lower > upper) {
    return absl::InvalidArgumentError(
        absl::StrCat("arc bounds [", lower, ", ", upper, "] are empty"));
  }
  arcs_.push_back({from, to, lower, upper});
  return static_cast<int>(arcs_.size()) - 1;
}

std::optional<std::vector<FlowQuantity>> FindFeasibleCirculation(
    const LowerBoundNetwork& network) {
  const int n = network.num_nodes();
  MaxFlow mf(n + 2);
  const int s = n, t = n + 1;
  std::vector<FlowQuantity> excess(n, 0);
  std::vector<int> ids;
  for (const BoundedArc& a : network.arcs()) {
    ids.push_back(mf.AddArc(a.from, a.to, a.upper - a.lower));
    excess[a.to] += a.lower;
    excess[a.from] -= a.lower;
  }
  FlowQuantity demand = 0;
  for (int v = 0; v < n; ++v) {
    if (excess[v] > 0) {
      mf.AddArc(s, v, excess[v]);
      demand += excess[v];
    } else if (excess[v] < 0) {
      mf.AddArc(v, t, -excess[v]);
    }
  }
  if (mf.Solve(s, t) != demand) return std::nullopt;
  std::vector<FlowQuantity> flow;
  for (int i = 0; i < static_cast<int>(ids.size()); ++i) {
    flow.push_back(network.arcs()[i].lower + mf.Flow(ids[i]));
  }
  return flow;
}

}  // namespace nsw
