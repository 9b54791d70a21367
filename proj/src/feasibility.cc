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

#include "nsw/feasibility.h"

#include <vector>

#include "nsw/graph/flow.h"

namespace nsw {

std::optional<Matching> ExistsNonzeroNash(const Instance& inst) {
  const int m = inst.num_workers();
  const int n = inst.num_firms();
  for (int f = 0; f < n; ++f) {
    if (inst.capacity(f) == 0) return std::nullopt;
  }
  // Nodes: source, sink, workers, then per firm a "valued" inlet, an
  // "unvalued" inlet and a collector. Only the valued inlet has a lower bound.
  const int source = 0, sink = 1;
  auto worker = [](int w) { return 2 + w; };
  auto valued = [m](int f) { return 2 + m + 3 * f; };
  auto unvalued = [m](int f) { return 2 + m + 3 * f + 1; };
  auto collector = [m](int f) { return 2 + m + 3 * f + 2; };
  LowerBoundNetwork net(2 + m + 3 * n);

  struct Pair {
    int arc, w, f;
  };
  std::vector<Pair> pairs;
  for (int w = 0; w < m; ++w) {
    (void)net.AddArc(source, worker(w), 1, 1);
    for (int f = 0; f < n; ++f) {
      if (inst.worker_value(w, f) == 0) continue;
      const int to = inst.firm_value(f, w) > 0 ? valued(f) : unvalued(f);
      pairs.push_back({*net.AddArc(worker(w), to, 0, 1), w, f});
    }
  }
  for (int f = 0; f < n; ++f) {
    const FlowQuantity c = inst.capacity(f);
    (void)net.AddArc(valued(f), collector(f), 1, c);
    (void)net.AddArc(unvalued(f), collector(f), 0, c);
    (void)net.AddArc(collector(f), sink, 0, c);
  }
  (void)net.AddArc(sink, source, 0, kInfiniteCapacity);

  const std::optional<std::vector<FlowQuantity>> flow = FindFeasibleCirculation(net);
  if (!flow) return std::nullopt;
  Matching mu = Matching::Empty(m);
  for (const Pair& p : pairs) {
    if ((*flow)[p.arc] > 0) mu.assignment[p.w] = p.f;
  }
  return mu;
}

}  // namespace nsw
