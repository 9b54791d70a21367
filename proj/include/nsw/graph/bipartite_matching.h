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

// Maximum-weight bipartite b-matching by successive shortest paths.
//
// Vertices [0, L) are the left side and [L, L + R) the right side. Each
// augmentation follows a maximum-profit path found by Bellman-Ford on the
// residual graph; that keeps the flow of every size optimal, which is what
// makes the left-saturating variant correct.

#ifndef NSW_GRAPH_BIPARTITE_MATCHING_H_
#define NSW_GRAPH_BIPARTITE_MATCHING_H_

#include <optional>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/str_cat.h"
#include "nsw/graph/weighted_graph.h"

namespace nsw {

template <typename W>
struct BipartiteMatchingResult {
  std::vector<int> edges;  // Indices into the input edge list.
  W total_weight{};
};

template <typename W>
struct BipartiteOptions {
  bool require_left_saturated = false;
  // Per-vertex capacities; empty means 1 everywhere.
  std::vector<int> left_capacity;
  std::vector<int> right_capacity;
};

namespace internal {

template <typename W>
class SuccessiveShortestPaths {
 public:
  SuccessiveShortestPaths(int num_nodes) : adj_(num_nodes) {}

  void AddArc(int u, int v, int cap, W cost) {
    adj_[u].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({v, cap, cost});
    adj_[v].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({u, 0, -cost});
  }

  // Cheapest residual path cost, or nullopt when the sink is unreachable.
  std::optional<W> ShortestPath(int source, int sink) {
    using T = WeightTraits<W>;
    const int n = static_cast<int>(adj_.size());
    std::vector<std::optional<W>> dist(n);
    parent_arc_.assign(n, -1);
    dist[source] = T::Zero();
    for (int round = 0; round < n; ++round) {
      bool changed = false;
      for (int u = 0; u < n; ++u) {
        if (!dist[u]) continue;
        for (int a : adj_[u]) {
          if (arcs_[a].cap == 0) continue;
          const int v = arcs_[a].to;
          W d = *dist[u] + arcs_[a].cost;
          if (!dist[v] || !T::IsNonPositive(*dist[v] - d)) {
            dist[v] = std::move(d);
            parent_arc_[v] = a;
            changed = true;
          }
        }
      }
      if (!changed) break;
    }
    return dist[sink];
  }

  void Augment(int source, int sink) {
    for (int v = sink; v != source;) {
      const int a = parent_arc_[v];
      --arcs_[a].cap;
      ++arcs_[a ^ 1].cap;
      v = arcs_[a ^ 1].to;
    }
  }

  bool Saturated(int arc) const { return arcs_[arc].cap == 0; }

 private:
  struct Arc {
    int to;
    int cap;
    W cost;
  };
  std::vector<std::vector<int>> adj_;
  std::vector<Arc> arcs_;
  std::vector<int> parent_arc_;
};

}  // namespace internal

// With require_left_saturated, maximizes over matchings that use every left
// vertex's full capacity and fails with FailedPrecondition when none exists.
// Otherwise stops as soon as no augmenting path has positive profit.
template <typename W>
absl::StatusOr<BipartiteMatchingResult<W>> MaxWeightBipartiteMatching(
    const WeightedGraph<W>& g, int left_size, int right_size,
    const BipartiteOptions<W>& options = {}) {
  using T = WeightTraits<W>;
  if (left_size + right_size != g.num_vertices) {
    return absl::InvalidArgumentError("bipartition does not cover the graph");
  }
  const int source = left_size + right_size;
  const int sink = source + 1;
  internal::SuccessiveShortestPaths<W> ssp(sink + 1);
  int demand = 0;
  for (int i = 0; i < left_size; ++i) {
    const int c = options.left_capacity.empty() ? 1 : options.left_capacity[i];
    ssp.AddArc(source, i, c, T::Zero());
    demand += c;
  }
  std::vector<int> edge_arc;
  for (const WeightedEdge<W>& e : g.edges) {
    if (e.u < 0 || e.u >= left_size || e.v < left_size || e.v >= g.num_vertices) {
      return absl::InvalidArgumentError(
          absl::StrCat("edge (", e.u, ", ", e.v, ") crosses the bipartition badly"));
    }
    // Arc ids come in pairs; record the forward one.
    edge_arc.push_back(2 * (left_size + static_cast<int>(edge_arc.size())));
    ssp.AddArc(e.u, e.v, 1, -e.weight);
  }
  for (int j = 0; j < right_size; ++j) {
    const int c = options.right_capacity.empty() ? 1 : options.right_capacity[j];
    ssp.AddArc(left_size + j, sink, c, T::Zero());
  }
  for (int flow = 0; flow < demand; ++flow) {
    std::optional<W> cost = ssp.ShortestPath(source, sink);
    if (!cost) {
      if (options.require_left_saturated) {
        return absl::FailedPreconditionError("no left-saturating matching exists");
      }
      break;
    }
    if (!options.require_left_saturated && T::IsNonPositive(-*cost)) break;
    ssp.Augment(source, sink);
  }
  BipartiteMatchingResult<W> result;
  result.total_weight = T::Zero();
  for (int i = 0; i < static_cast<int>(g.edges.size()); ++i) {
    if (ssp.Saturated(edge_arc[i])) {
      result.edges.push_back(i);
      result.total_weight = result.total_weight + g.edges[i].weight;
    }
  }
  return result;
}

}  // namespace nsw

#endif  // NSW_GRAPH_BIPARTITE_MATCHING_H_
