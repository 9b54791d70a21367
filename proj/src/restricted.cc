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

#include "nsw/restricted.h"

#include <algorithm>
#include <cmath>
#include <queue>
#include <utility>

#include "absl/strings/str_cat.h"
#include "nsw/feasibility.h"
#include "nsw/graph/general_matching.h"
#include "nsw/graph/log_weight.h"

namespace nsw {

ExchangeGraph::ExchangeGraph(const Instance& inst, const Matching& mu)
    : out_(inst.num_firms()) {
  for (int w = 0; w < inst.num_workers(); ++w) {
    const int f = mu.firm_of(w);
    if (f == kUnmatched) continue;
    for (int g = 0; g < inst.num_firms(); ++g) {
      if (g == f || inst.firm_value(g, w) != 1) continue;
      out_[f].push_back(static_cast<int>(arcs_.size()));
      arcs_.push_back({f, g, w});
    }
  }
  for (auto& list : out_) std::sort(list.begin(), list.end());
}

int ExchangeGraph::Multiplicity(int from, int to) const {
  int count = 0;
  for (int a : out_[from]) count += arcs_[a].to == to;
  return count;
}

std::vector<int> ExchangeGraph::FindPath(int u, int v) const {
  if (u == v) return {};
  std::vector<int> via(num_firms(), -1);
  std::vector<bool> seen(num_firms(), false);
  std::queue<int> q;
  q.push(u);
  seen[u] = true;
  while (!q.empty() && !seen[v]) {
    const int f = q.front();
    q.pop();
    for (int a : out_[f]) {
      const int g = arcs_[a].to;
      if (seen[g]) continue;
      seen[g] = true;
      via[g] = a;
      q.push(g);
    }
  }
  if (!seen[v]) return {};
  std::vector<int> path;
  for (int f = v; f != u; f = arcs_[via[f]].from) path.push_back(via[f]);
  std::reverse(path.begin(), path.end());
  return path;
}

std::vector<bool> ExchangeGraph::Reachable(int u) const {
  std::vector<bool> seen(num_firms(), false);
  std::vector<int> stack = {u};
  seen[u] = true;
  while (!stack.empty()) {
    const int f = stack.back();
    stack.pop_back();
    for (int a : out_[f]) {
      const int g = arcs_[a].to;
      if (!seen[g]) {
        seen[g] = true;
        stack.push_back(g);
      }
    }
  }
  return seen;
}

int SymmetricBinaryIterationBound(const Instance& inst) {
  const double m = inst.num_workers();
  const double n = inst.num_firms();
  return static_cast<int>(std::ceil(2.0 * m * (n + 1.0) * std::log(n * m)));
}

bool IsSymmetricBinary(const Instance& inst) {
  for (int w = 0; w < inst.num_workers(); ++w) {
    for (int f = 0; f < inst.num_firms(); ++f) {
      const Value a = inst.worker_value(w, f);
      if (a != inst.firm_value(f, w) || a > 1) return false;
    }
  }
  return true;
}

absl::StatusOr<SymmetricBinaryResult> SolveSymmetricBinary(
    const Instance& inst, const SymmetricBinaryOptions& options) {
  if (!IsSymmetricBinary(inst)) {
    return absl::FailedPreconditionError("valuations are not symmetric binary");
  }
  std::optional<Matching> start = ExistsNonzeroNash(inst);
  if (!start.has_value()) return SymmetricBinaryResult{ZeroSolution(inst), 0};

  const int n = inst.num_firms();
  const int cap = SymmetricBinaryIterationBound(inst) + options.iteration_margin;
  Matching mu = *std::move(start);
  NashValue value = ComputeNashValue(inst, mu);
  if (value.is_zero()) return absl::InternalError("feasibility witness has zero product");

  int iterations = 0;
  while (true) {
    // Every worker has utility 1, so firm utilities are bundle sizes.
    const std::vector<int> size = mu.bundle_sizes(n);
    const ExchangeGraph g(inst, mu);
    int best_u = -1, best_v = -1;
    int64_t best_num = 0, best_den = 1;
    for (int u = 0; u < n; ++u) {
      if (size[u] < 2) continue;
      const std::vector<bool> reach = g.Reachable(u);
      for (int v = 0; v < n; ++v) {
        if (v == u || !reach[v] || size[v] >= inst.capacity(v)) continue;
        if (size[u] < size[v] + 2) continue;
        // Gain factor (s_u - 1)(s_v + 1) / (s_u s_v).
        const int64_t num = int64_t{size[u] - 1} * (size[v] + 1);
        const int64_t den = int64_t{size[u]} * size[v];
        if (best_u == -1 || num * best_den > best_num * den) {
          best_u = u, best_v = v, best_num = num, best_den = den;
        }
      }
    }
    if (best_u == -1) break;
    if (++iterations > cap) {
      return absl::InternalError(absl::StrCat("exceeded ", cap, " improvement steps"));
    }
    for (int a : g.FindPath(best_u, best_v)) {
      mu.assignment[g.arcs()[a].worker] = g.arcs()[a].to;
    }
    NashValue next = ComputeNashValue(inst, mu);
    if (!(next > value)) return absl::InternalError("improving path did not improve");
    value = std::move(next);
  }
  return SymmetricBinaryResult{Solution{std::move(mu), std::move(value)}, iterations};
}

namespace {

using Pairs = std::vector<std::pair<int, int>>;  // (worker, firm)

// Product of the utilities of the agents that appear in `pairs`, or zero when
// a capacity is exceeded. Agents of the component are exactly those covered.
BigInt ComponentProduct(const Instance& inst, const Pairs& pairs,
                        const std::vector<int>& firms) {
  std::vector<Value> firm_util(inst.num_firms(), 0);
  std::vector<int> load(inst.num_firms(), 0);
  BigInt p = 1;
  for (auto [w, f] : pairs) {
    p *= inst.worker_value(w, f);
    firm_util[f] += inst.firm_value(f, w);
    if (++load[f] > inst.capacity(f)) return 0;
  }
  for (int f : firms) p *= firm_util[f];
  return p;
}

}  // namespace

absl::StatusOr<Solution> SolveDegreeTwo(const Instance& inst) {
  const DegreeProfile deg = ComputeDegreeProfile(inst);
  if (deg.max_degree > 2) {
    return absl::FailedPreconditionError(
        absl::StrCat("maximum degree is ", deg.max_degree, ", expected at most 2"));
  }
  const int m = inst.num_workers();
  const int total = inst.num_agents();
  // Agents 0..m-1 are workers, m.. are firms.
  std::vector<std::vector<int>> adj(total);
  for (int w = 0; w < m; ++w) {
    for (int f = 0; f < inst.num_firms(); ++f) {
      if (HasEdge(inst, w, f)) {
        adj[w].push_back(m + f);
        adj[m + f].push_back(w);
      }
    }
  }
  auto pair_of = [m](int a, int b) {
    return a < m ? std::make_pair(a, b - m) : std::make_pair(b, a - m);
  };

  Matching mu = Matching::Empty(m);
  std::vector<bool> seen(total, false);
  for (int root = 0; root < total; ++root) {
    if (seen[root]) continue;
    // Collect the component; start a walk at its smallest endpoint, or at
    // its smallest agent when it is a cycle.
    std::vector<int> members = {root};
    seen[root] = true;
    for (size_t i = 0; i < members.size(); ++i) {
      for (int b : adj[members[i]]) {
        if (!seen[b]) seen[b] = true, members.push_back(b);
      }
    }
    std::sort(members.begin(), members.end());
    if (members.size() == 1) return ZeroSolution(inst);  // Isolated agent.
    int start = -1;
    for (int a : members) {
      if (adj[a].size() == 1) {
        start = a;
        break;
      }
    }
    const bool cycle = start == -1;
    if (cycle) start = members.front();
    std::vector<int> seq = {start};
    int prev = -1, cur = start;
    while (true) {
      int next = -1;
      for (int b : adj[cur]) {
        if (b != prev && (next == -1 || b < next)) next = b;
      }
      if (next == -1 || next == start) break;
      seq.push_back(next);
      prev = cur, cur = next;
    }

    std::vector<int> firms;
    int num_workers = 0;
    for (int a : seq) {
      if (a < m) ++num_workers;
      else firms.push_back(a - m);
    }
    const int num_firms = static_cast<int>(firms.size());
    const int len = static_cast<int>(seq.size());
    auto consecutive = [&](int from, int to, Pairs& out) {
      for (int i = from; i + 1 <= to; i += 2) out.push_back(pair_of(seq[i], seq[i + 1]));
    };
    std::vector<Pairs> candidates;
    if (cycle) {
      // Every firm takes one worker: the two perfect matchings of the cycle.
      Pairs a, b;
      consecutive(0, len - 1, a);
      consecutive(1, len - 1, b);
      b.push_back(pair_of(seq[len - 1], seq[0]));
      candidates = {a, b};
    } else if (num_firms > num_workers) {
      return ZeroSolution(inst);
    } else if (num_firms == num_workers) {
      Pairs a;
      consecutive(0, len - 1, a);
      candidates = {a};
    } else {
      // w f w ... f w: guess the firm taking both of its neighbors.
      for (int i = 1; i < len; i += 2) {
        Pairs a;
        consecutive(0, i - 2, a);
        a.push_back(pair_of(seq[i - 1], seq[i]));
        a.push_back(pair_of(seq[i + 1], seq[i]));
        consecutive(i + 2, len - 1, a);
        candidates.push_back(std::move(a));
      }
    }
    BigInt best = 0;
    const Pairs* chosen = nullptr;
    for (const Pairs& c : candidates) {
      BigInt p = ComponentProduct(inst, c, firms);
      if (p > best) best = std::move(p), chosen = &c;
    }
    if (chosen == nullptr) return ZeroSolution(inst);
    for (auto [w, f] : *chosen) mu.assignment[w] = f;
  }
  return MakeSolution(inst, std::move(mu));
}

std::vector<std::vector<int>> UsableNeighborhoods(const Instance& inst) {
  std::vector<std::vector<int>> nbrs(inst.num_firms());
  for (int f = 0; f < inst.num_firms(); ++f) {
    for (int w = 0; w < inst.num_workers(); ++w) {
      if (inst.worker_value(w, f) > 0) nbrs[f].push_back(w);
    }
  }
  return nbrs;
}

namespace {

std::vector<int> Intersect(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<int> Minus(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// Usable neighborhoods restricted to live workers of live firms.
std::vector<std::vector<int>> LiveNeighborhoods(const Instance& inst,
                                                const std::vector<bool>& live_worker,
                                                const std::vector<bool>& live_firm) {
  std::vector<std::vector<int>> nbrs = UsableNeighborhoods(inst);
  for (int f = 0; f < inst.num_firms(); ++f) {
    if (!live_firm[f]) {
      nbrs[f].clear();
      continue;
    }
    std::erase_if(nbrs[f], [&](int w) { return !live_worker[w]; });
  }
  return nbrs;
}

std::optional<ReduciblePair> FindPair(const std::vector<std::vector<int>>& nbrs,
                                      const std::vector<bool>& live_firm) {
  const int n = static_cast<int>(nbrs.size());
  for (int f = 0; f < n; ++f) {
    if (!live_firm[f] || nbrs[f].size() != 3) continue;
    for (int g = f + 1; g < n; ++g) {
      if (!live_firm[g] || nbrs[g].size() != 3) continue;
      const std::vector<int> shared = Intersect(nbrs[f], nbrs[g]);
      if (shared.size() != 2) continue;
      return ReduciblePair{f, g, {shared[0], shared[1], Minus(nbrs[f], shared)[0],
                                  Minus(nbrs[g], shared)[0]}};
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<ReduciblePair> FindReduciblePair(const Instance& inst) {
  return FindPair(UsableNeighborhoods(inst), std::vector<bool>(inst.num_firms(), true));
}

absl::StatusOr<Instance> InducedSubinstance(const Instance& inst,
                                            const std::vector<int>& workers,
                                            const std::vector<int>& firms) {
  std::vector<int> caps;
  ValueMatrix wv(workers.size()), fv(firms.size());
  for (int f : firms) caps.push_back(inst.capacity(f));
  for (size_t i = 0; i < workers.size(); ++i) {
    for (int f : firms) wv[i].push_back(inst.worker_value(workers[i], f));
  }
  for (size_t j = 0; j < firms.size(); ++j) {
    for (int w : workers) fv[j].push_back(inst.firm_value(firms[j], w));
  }
  return Instance::Create(std::move(caps), std::move(wv), std::move(fv));
}

absl::StatusOr<DegreeThreeResult> SolveDegree3Capacity2(const Instance& inst) {
  const DegreeProfile deg = ComputeDegreeProfile(inst);
  for (int f = 0; f < inst.num_firms(); ++f) {
    if (deg.firm_degrees[f] > 3) {
      return absl::FailedPreconditionError(
          absl::StrCat("firm ", f, " has degree ", deg.firm_degrees[f], ", expected at most 3"));
    }
  }
  const int m = inst.num_workers();
  const int n = inst.num_firms();
  DegreeThreeResult result{ZeroSolution(inst), true, 0};
  if (m != 2 * n) return result;
  for (int f = 0; f < n; ++f) {
    if (inst.capacity(f) < 2) return result;
  }

  std::vector<bool> live_worker(m, true), live_firm(n, true);
  Matching mu = Matching::Empty(m);
  auto pair_product = [&](int f, int a, int b) {
    return BigInt(inst.firm_value(f, a) + inst.firm_value(f, b)) * inst.worker_value(a, f) *
           inst.worker_value(b, f);
  };

  // Two firms sharing exactly two workers must split the shared pair and
  // take their private workers; the six agents are solved on their own.
  while (true) {
    const auto nbrs = LiveNeighborhoods(inst, live_worker, live_firm);
    const std::optional<ReduciblePair> rp = FindPair(nbrs, live_firm);
    if (!rp.has_value()) break;
    const auto [f, g, w] = *rp;
    const BigInt a = pair_product(f, w[0], w[2]) * pair_product(g, w[1], w[3]);
    const BigInt b = pair_product(f, w[1], w[2]) * pair_product(g, w[0], w[3]);
    if (a == 0 && b == 0) return result;
    const bool first = a >= b;
    mu.assignment[first ? w[0] : w[1]] = f;
    mu.assignment[w[2]] = f;
    mu.assignment[first ? w[1] : w[0]] = g;
    mu.assignment[w[3]] = g;
    live_firm[f] = live_firm[g] = false;
    for (int x : w) live_worker[x] = false;
    ++result.reductions_applied;
  }

  // Now any two live firms share at most one worker unless the instance is
  // infeasible (identical neighborhoods, or a degree-two firm inside another
  // firm's neighborhood).
  const auto nbrs = LiveNeighborhoods(inst, live_worker, live_firm);
  for (int f = 0; f < n; ++f) {
    if (!live_firm[f]) continue;
    if (nbrs[f].size() < 2) return result;
    for (int g = f + 1; g < n; ++g) {
      if (live_firm[g] && Intersect(nbrs[f], nbrs[g]).size() >= 2) return result;
    }
  }

  std::vector<int> workers;
  std::vector<int> index(m, -1);
  for (int w = 0; w < m; ++w) {
    if (live_worker[w]) {
      index[w] = static_cast<int>(workers.size());
      workers.push_back(w);
    }
  }
  WeightedGraph<LogWeight> wg{static_cast<int>(workers.size()), {}};
  std::vector<int> edge_firm;
  for (int f = 0; f < n; ++f) {
    const std::vector<int>& nb = nbrs[f];
    for (size_t i = 0; i < nb.size(); ++i) {
      for (size_t j = i + 1; j < nb.size(); ++j) {
        const BigInt p = pair_product(f, nb[i], nb[j]);
        if (p == 0) continue;
        wg.AddEdge(index[nb[i]], index[nb[j]], LogWeight::Log(LogWeight::Rational(p)));
        edge_firm.push_back(f);
      }
    }
  }
  if (!workers.empty()) {
    auto pm = MaxWeightPerfectMatching(wg);
    if (!pm.ok()) return result;
    for (int e : pm->edges) {
      mu.assignment[workers[wg.edges[e].u]] = edge_firm[e];
      mu.assignment[workers[wg.edges[e].v]] = edge_firm[e];
    }
  }
  for (int s : mu.bundle_sizes(n)) {
    if (s != 2) return absl::InternalError("firm did not receive exactly two workers");
  }
  Solution sol = MakeSolution(inst, std::move(mu));
  if (sol.value.is_zero()) return absl::InternalError("perfect matching has zero product");
  return DegreeThreeResult{std::move(sol), false, result.reductions_applied};
}

absl::StatusOr<Solution> SolveSinglePositiveFirm(const Instance& inst) {
  Matching mu = Matching::Empty(inst.num_workers());
  for (int w = 0; w < inst.num_workers(); ++w) {
    for (int f = 0; f < inst.num_firms(); ++f) {
      if (inst.worker_value(w, f) == 0) continue;
      if (mu.is_matched(w)) {
        return absl::FailedPreconditionError(
            absl::StrCat("worker ", w, " values more than one firm positively"));
      }
      mu.assignment[w] = f;
    }
    if (!mu.is_matched(w)) {
      return absl::FailedPreconditionError(absl::StrCat("worker ", w, " values no firm"));
    }
  }
  if (!Validate(inst, mu).ok()) return ZeroSolution(inst);
  Solution sol = MakeSolution(inst, std::move(mu));
  if (sol.value.is_zero()) return ZeroSolution(inst);
  return sol;
}

}  // namespace nsw
