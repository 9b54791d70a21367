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

#include "nsw/exact.h"

#include <bit>
#include <map>
#include <utility>

#include "absl/strings/str_cat.h"
#include "nsw/bucketing.h"
#include "nsw/graph/bipartite_matching.h"
#include "nsw/graph/log_weight.h"

namespace nsw {
namespace {

// Per-firm bundle values W_f(S) for every S with |S| <= c_f.
std::vector<BigInt> BundleValues(const Instance& inst, int f) {
  const int m = inst.num_workers();
  const uint32_t full = 1u << m;
  std::vector<Value> additive(full, 0);
  std::vector<BigInt> product(full, 0);
  std::vector<BigInt> out(full, 0);
  product[0] = 1;
  for (uint32_t s = 1; s < full; ++s) {
    const int w = std::countr_zero(s);
    const uint32_t rest = s & (s - 1);
    additive[s] = additive[rest] + inst.firm_value(f, w);
    if (std::popcount(s) > inst.capacity(f)) continue;
    product[s] = product[rest] * inst.worker_value(w, f);
    out[s] = product[s] * additive[s];
  }
  return out;
}

absl::Status CheckDPBudget(const Instance& inst, const ExactOptions& options) {
  if (inst.num_workers() > options.max_dp_workers || inst.num_workers() > 30) {
    return absl::ResourceExhaustedError(absl::StrCat(
        "subset DP limited to ", options.max_dp_workers, " workers, got ",
        inst.num_workers()));
  }
  return absl::OkStatus();
}

// Calls fn(sub) for every nonempty sub of s with popcount <= cap, in
// decreasing numeric order.
template <typename F>
void ForSubmasks(uint32_t s, int cap, const F& fn) {
  for (uint32_t sub = s; sub != 0; sub = (sub - 1) & s) {
    if (std::popcount(sub) <= cap) fn(sub);
  }
}

// Calls fn(sub) for every nonempty sub of s with popcount <= cap by
// building combinations of the elements of s.
template <typename F>
void ForSmallSubsets(uint32_t s, int cap, const F& fn) {
  int elems[32];
  int k = 0;
  for (uint32_t t = s; t != 0; t &= t - 1) elems[k++] = std::countr_zero(t);
  auto rec = [&](auto&& self, int start, int size, uint32_t acc) -> void {
    if (size > 0) fn(acc);
    if (size == cap) return;
    for (int i = start; i < k; ++i) self(self, i + 1, size + 1, acc | (1u << elems[i]));
  };
  rec(rec, 0, 0, 0);
}

// Fills the table with an enumerator of candidate bundles. Among maximizers
// the numerically smallest bundle is recorded.
template <typename Enumerate>
DPTable BuildTable(const Instance& inst, const Enumerate& enumerate) {
  const int m = inst.num_workers();
  const int n = inst.num_firms();
  const uint32_t full = 1u << m;
  DPTable t;
  t.value.assign(n, std::vector<BigInt>(full, 0));
  t.choice.assign(n, std::vector<uint32_t>(full, 0));
  for (int i = 0; i < n; ++i) {
    const std::vector<BigInt> bundle = BundleValues(inst, i);
    for (uint32_t s = 1; s < full; ++s) {
      if (i == 0) {
        t.value[0][s] = bundle[s];
        t.choice[0][s] = bundle[s] > 0 ? s : 0;
        continue;
      }
      BigInt best = 0;
      uint32_t arg = 0;
      enumerate(s, inst.capacity(i), [&](uint32_t sub) {
        if (bundle[sub] == 0) return;
        const BigInt& rest = t.value[i - 1][s ^ sub];
        if (rest == 0) return;
        BigInt cand = bundle[sub] * rest;
        if (cand > best || (cand == best && sub < arg)) {
          best = std::move(cand);
          arg = sub;
        }
      });
      t.value[i][s] = std::move(best);
      t.choice[i][s] = arg;
    }
  }
  return t;
}

Solution Recover(const Instance& inst, const DPTable& t) {
  const int n = inst.num_firms();
  uint32_t s = static_cast<uint32_t>(inst.all_workers());
  if (t.value[n - 1][s] == 0) return ZeroSolution(inst);
  Matching mu = Matching::Empty(inst.num_workers());
  for (int i = n - 1; i >= 0; --i) {
    const uint32_t sub = t.choice[i][s];
    for (uint32_t b = sub; b != 0; b &= b - 1) mu.assignment[std::countr_zero(b)] = i;
    s ^= sub;
  }
  return MakeSolution(inst, std::move(mu));
}

}  // namespace

absl::StatusOr<Solution> SolveCapacityOne(const Instance& inst) {
  for (int f = 0; f < inst.num_firms(); ++f) {
    if (inst.capacity(f) != 1) {
      return absl::FailedPreconditionError(
          absl::StrCat("firm ", f, " has capacity ", inst.capacity(f), ", expected 1"));
    }
  }
  const int m = inst.num_workers();
  const int n = inst.num_firms();
  // Unit capacities: a nonzero matching is a perfect matching.
  if (m != n) return ZeroSolution(inst);
  WeightedGraph<LogWeight> g{m + n, {}};
  std::vector<std::pair<int, int>> pairs;
  for (int w = 0; w < m; ++w) {
    for (int f = 0; f < n; ++f) {
      const Value p = inst.worker_value(w, f) * inst.firm_value(f, w);
      if (p == 0) continue;
      g.AddEdge(w, m + f, LogWeight::Log(p));
      pairs.emplace_back(w, f);
    }
  }
  auto r = MaxWeightBipartiteMatching(g, m, n, {.require_left_saturated = true});
  if (!r.ok()) return ZeroSolution(inst);
  Matching mu = Matching::Empty(m);
  for (int e : r->edges) mu.assignment[pairs[e].first] = pairs[e].second;
  return MakeSolution(inst, std::move(mu));
}

absl::StatusOr<DPTable> BuildDPTable(const Instance& inst,
                                     const ExactOptions& options) {
  if (absl::Status s = CheckDPBudget(inst, options); !s.ok()) return s;
  return BuildTable(inst, [](uint32_t s, int cap, const auto& fn) {
    ForSubmasks(s, cap, fn);
  });
}

absl::StatusOr<Solution> SolveDP(const Instance& inst, const ExactOptions& options) {
  absl::StatusOr<DPTable> t = BuildDPTable(inst, options);
  if (!t.ok()) return t.status();
  return Recover(inst, *t);
}

absl::StatusOr<Solution> SolveDPBoundedCapacity(const Instance& inst,
                                                const ExactOptions& options) {
  if (inst.max_capacity() > options.max_dp2_capacity) {
    return absl::FailedPreconditionError(
        absl::StrCat("capacity ", inst.max_capacity(), " exceeds the bound ",
                     options.max_dp2_capacity));
  }
  if (absl::Status s = CheckDPBudget(inst, options); !s.ok()) return s;
  return Recover(inst, BuildTable(inst, [](uint32_t s, int cap, const auto& fn) {
                   ForSmallSubsets(s, cap, fn);
                 }));
}

absl::StatusOr<Solution> SolveExactBucketing(const Instance& inst,
                                             const ExactOptions& options) {
  if (inst.num_firms() > options.max_bucket_firms) {
    return absl::FailedPreconditionError(absl::StrCat(
        "exact bucketing needs at most ", options.max_bucket_firms, " firms"));
  }
  if (inst.num_distinct_values() > options.max_distinct_values) {
    return absl::FailedPreconditionError(absl::StrCat(
        "exact bucketing needs at most ", options.max_distinct_values,
        " distinct values"));
  }
  // Workers with identical (v_{w,f}, v_{f,w}) are interchangeable for f.
  std::vector<std::vector<int>> class_of(inst.num_firms(),
                                         std::vector<int>(inst.num_workers(), -1));
  for (int f = 0; f < inst.num_firms(); ++f) {
    std::map<std::pair<Value, Value>, int> ids;
    for (int w = 0; w < inst.num_workers(); ++w) {
      if (inst.worker_value(w, f) == 0) continue;
      auto key = std::make_pair(inst.worker_value(w, f), inst.firm_value(f, w));
      class_of[f][w] = ids.emplace(key, static_cast<int>(ids.size())).first->second;
    }
  }
  return SolveByClassCounts(inst, class_of, options.max_guesses);
}

}  // namespace nsw
