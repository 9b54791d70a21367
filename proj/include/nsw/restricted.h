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

// Exact polynomial-time solvers for restricted domains:
//
//  * symmetric binary valuations (exchange-graph local search),
//  * instances where every agent has degree at most two,
//  * firms of degree at most three that must each receive exactly two
//    workers, and
//  * instances where every worker values a single firm positively.
//
// Every solver validates its domain and returns FailedPrecondition outside
// it. Zero optima are reported as the empty matching.

#ifndef NSW_RESTRICTED_H_
#define NSW_RESTRICTED_H_

#include <array>
#include <optional>
#include <vector>

#include "absl/status/statusor.h"
#include "nsw/instance.h"
#include "nsw/welfare.h"

namespace nsw {

// Directed firm graph G(mu): one arc f -> f' for every worker currently at f
// that f' values at 1. Arcs are listed by (from, worker, to).
struct ExchangeArc {
  int from;
  int to;
  int worker;
};

class ExchangeGraph {
 public:
  ExchangeGraph(const Instance& inst, const Matching& mu);

  int num_firms() const { return static_cast<int>(out_.size()); }
  const std::vector<ExchangeArc>& arcs() const { return arcs_; }
  // Arc indices leaving f.
  const std::vector<int>& out(int f) const { return out_[f]; }
  int Multiplicity(int from, int to) const;

  // Shortest path u ~> v as arc indices (fewest arcs, then smallest arc
  // indices). Empty when v is unreachable or u == v.
  std::vector<int> FindPath(int u, int v) const;
  // reach[v] for every v reachable from u (u itself included).
  std::vector<bool> Reachable(int u) const;

 private:
  std::vector<ExchangeArc> arcs_;
  std::vector<std::vector<int>> out_;
};

struct SymmetricBinaryOptions {
  // Extra iterations allowed beyond the theoretical bound before the solver
  // reports an internal error.
  int iteration_margin = 16;
};

struct SymmetricBinaryResult {
  Solution solution;
  int iterations = 0;
};

// ceil(2 m (n + 1) ln(n m)).
int SymmetricBinaryIterationBound(const Instance& inst);

// True iff v_{w,f} = v_{f,w} in {0, 1} for every pair.
bool IsSymmetricBinary(const Instance& inst);

// Starts from a nonzero matching and repeatedly applies the best improving
// path of the exchange graph. Only the path's endpoints change utility, so
// the best path is the one maximizing (u_u - 1)(u_v + 1) / (u_u u_v) over
// pairs with u ~> v and slack at v.
absl::StatusOr<SymmetricBinaryResult> SolveSymmetricBinary(
    const Instance& inst, const SymmetricBinaryOptions& options = {});

// Degree at most two: components are paths and cycles, each solved by the
// usual casework and combined.
absl::StatusOr<Solution> SolveDegreeTwo(const Instance& inst);

struct DegreeThreeResult {
  Solution solution;
  // No matching gives every firm exactly two workers with a nonzero product.
  bool no_instance = false;
  int reductions_applied = 0;
};

// Firms f, f' with |N(f)| = |N(f')| = 3 sharing exactly two workers; the
// shared pair comes first, followed by the private worker of f, then f'.
struct ReduciblePair {
  int f;
  int f2;
  std::array<int, 4> workers;
};

// Neighborhoods used by the exactly-two solver: workers that value the firm
// positively (any other assignment has a zero product).
std::vector<std::vector<int>> UsableNeighborhoods(const Instance& inst);

std::optional<ReduciblePair> FindReduciblePair(const Instance& inst);

// Copy restricted to the listed agents, in the given order.
absl::StatusOr<Instance> InducedSubinstance(const Instance& inst,
                                            const std::vector<int>& workers,
                                            const std::vector<int>& firms);

// Every firm must receive exactly two workers. Requires firm degree <= 3.
// Applies the two-shared-workers reduction exhaustively, then pairs the
// remaining workers by a maximum-weight perfect matching on the worker graph
// (edge {w, w'} through their unique common firm f, weighted by the log of
// the three utilities it creates).
absl::StatusOr<DegreeThreeResult> SolveDegree3Capacity2(const Instance& inst);

// Every worker values exactly one firm positively: the matching is forced.
absl::StatusOr<Solution> SolveSinglePositiveFirm(const Instance& inst);

}  // namespace nsw

#endif  // NSW_RESTRICTED_H_
