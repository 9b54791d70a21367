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

// Approximation algorithms: submodular greedy, bucketing scheme, and the
// set-polynomial approximation scheme.

#ifndef NSW_APPROX_H_
#define NSW_APPROX_H_

#include <cstdint>
#include <vector>

#include "absl/status/statusor.h"
#include "nsw/epsilon.h"
#include "nsw/instance.h"
#include "nsw/set_polynomial.h"
#include "nsw/welfare.h"

namespace nsw {

// v^_f(X) = ln(v_f(X) * prod_{w in X} v_{w,f}), with v^_f(empty) = 0.
// Monotone and submodular over nonempty bundles when all valuations are
// positive; at the empty set the convention breaks submodularity (a first
// worker can be worth less than a second one).
class ModifiedValuation {
 public:
  explicit ModifiedValuation(const Instance& inst) : inst_(inst) {}
  double Value(int f, WorkerSet x) const;

 private:
  const Instance& inst_;
};

struct GreedyOptions {
  // Gives every empty firm its first worker before any firm gets a second.
  // With the literal convention v^(empty) = 0 a firm with mediocre values can
  // be starved entirely, which forces a zero Nash product; see the tests.
  bool seed_empty_firms = true;
};

// Repeatedly adds the (worker, firm) pair of largest marginal gain in
// sum_f v^_f under the remaining capacities until every worker is placed.
// Gains are compared exactly as rationals; ties go to the smallest worker,
// then the smallest firm. FailedPrecondition unless every valuation is
// positive and the workers fit within the total capacity.
absl::StatusOr<Solution> GreedySubmodular(const Instance& inst,
                                          const GreedyOptions& options = {});

// Geometric buckets: 0 for value 0; otherwise i with
// (1+eps)^(i-1) <= v < (1+eps)^i, where the top bucket tau =
// max(1, ceil(log_{1+eps} v_max)) also takes v = (1+eps)^tau.
class QptasBuckets {
 public:
  QptasBuckets(const Epsilon& eps, Value v_max);
  int tau() const { return tau_; }
  int Of(Value v) const;

 private:
  Epsilon eps_;
  int tau_;
};

struct QptasOptions {
  int max_firms = 4;
  int64_t max_guesses = 20'000'000;
};

// Guesses per-firm counts over the (worker value bucket, firm value bucket)
// classes, realizes each guess with a flow and scores it exactly. Nash
// welfare is at least opt / (1 + eps).
absl::StatusOr<Solution> QptasBucketing(const Instance& inst, const Epsilon& eps,
                                        const QptasOptions& options = {});

// Upper bound eta on every matching's Nash product:
// prod_w max_f v_{w,f} * prod_f (sum of the c_f largest v_{f,.}).
// Never exceeds (m * v_max)^(m+n).
BigInt NashProductCeiling(const Instance& inst);

// h^j_{s,k}: monomials y^X with |X| = s and W_j(X) >= (1+eps)^k.
// InvalidArgument when s > c_j.
absl::StatusOr<SetPolynomial> BuildSingleFirmPoly(const Instance& inst, int j,
                                                  int s, int level,
                                                  const LevelLadder& ladder);

// Per-layer table indexed [size][level].
using PolyTable = std::vector<std::vector<SetPolynomial>>;

// p^j_{s,k} = union over s' + s'' = s (1 <= s' <= capacity) and
// k' + k'' = k of H_s(h^j_{s',k'} * p^{j-1}_{s'',k''}).
SetPolynomial CombinePolys(const PolyTable& h, const PolyTable& p_prev, int s,
                           int k, int capacity);

struct FptasOptions {
  int max_workers = 16;
  int64_t max_table_bytes = int64_t{1} << 31;
};

struct FptasResult {
  Solution solution;
  // Largest k with the full worker set in p^n_{m,k}; -1 for a zero optimum.
  int level = -1;
  int num_levels = 0;
};

// Returns a matching with Nash product P, opt * (1+eps)^-(n+1) <= P <= opt.
// Requires eps <= 1. ResourceExhausted past the worker or memory budget.
absl::StatusOr<FptasResult> FptasPolymul(const Instance& inst, const Epsilon& eps,
                                         const FptasOptions& options = {});

}  // namespace nsw

#endif  // NSW_APPROX_H_
