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

#include <bit>
#include <cmath>
#include <limits>

#include "absl/strings/str_cat.h"
#include "nsw/approx.h"

namespace nsw {

double ModifiedValuation::Value(int f, WorkerSet x) const {
  if (x == 0) return 0.0;
  double v = std::log(static_cast<double>(FirmValue(inst_, f, x)));
  for (; x != 0; x &= x - 1) {
    v += std::log(static_cast<double>(inst_.worker_value(std::countr_zero(x), f)));
  }
  return v;
}

namespace {

// exp(marginal gain) as a fraction num / den, plus a tier so that seeding
// an empty firm outranks everything else when requested.
struct Gain {
  int tier = 0;
  BigInt num = 0;
  BigInt den = 1;

  bool operator>(const Gain& o) const {
    if (tier != o.tier) return tier > o.tier;
    return num * o.den > o.num * den;
  }
};

}  // namespace

absl::StatusOr<Solution> GreedySubmodular(const Instance& inst,
                                          const GreedyOptions& options) {
  if (!inst.all_positive()) {
    return absl::FailedPreconditionError("greedy needs strictly positive valuations");
  }
  if (inst.num_workers() > inst.total_capacity()) {
    return absl::FailedPreconditionError("workers exceed total capacity");
  }
  const int m = inst.num_workers();
  const int n = inst.num_firms();
  Matching mu = Matching::Empty(m);
  std::vector<Value> firm_value(n, 0);
  std::vector<int> size(n, 0);
  for (int step = 0; step < m; ++step) {
    int best_w = -1, best_f = -1;
    Gain best;
    for (int w = 0; w < m; ++w) {
      if (mu.is_matched(w)) continue;
      for (int f = 0; f < n; ++f) {
        if (size[f] == inst.capacity(f)) continue;
        const Value a = firm_value[f];
        const Value b = inst.firm_value(f, w);
        const Value c = inst.worker_value(w, f);
        Gain g;
        if (size[f] == 0) {
          // exp(v^({w}) - v^(empty)) = b * c.
          g.tier = options.seed_empty_firms ? 1 : 0;
          g.num = BigInt(b) * c;
        } else {
          g.num = BigInt(a + b) * c;
          g.den = a;
        }
        if (best_w == -1 || g > best) {
          best = std::move(g);
          best_w = w;
          best_f = f;
        }
      }
    }
    mu.assignment[best_w] = best_f;
    firm_value[best_f] += inst.firm_value(best_f, best_w);
    ++size[best_f];
  }
  return MakeSolution(inst, std::move(mu));
}

}  // namespace nsw
