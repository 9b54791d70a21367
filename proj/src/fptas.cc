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

#include <algorithm>
#include <bit>
#include <functional>

#include "absl/strings/str_cat.h"
#include "nsw/approx.h"

namespace nsw {

BigInt NashProductCeiling(const Instance& inst) {
  BigInt eta = 1;
  for (int w = 0; w < inst.num_workers(); ++w) {
    const auto& row = inst.worker_vals()[w];
    eta *= *std::max_element(row.begin(), row.end());
  }
  for (int f = 0; f < inst.num_firms(); ++f) {
    std::vector<Value> vals = inst.firm_vals()[f];
    std::sort(vals.rbegin(), vals.rend());
    Value top = 0;
    for (int i = 0; i < std::min<int>(inst.capacity(f), vals.size()); ++i) top += vals[i];
    eta *= top;
  }
  return eta;
}

absl::StatusOr<SetPolynomial> BuildSingleFirmPoly(const Instance& inst, int j,
                                                  int s, int level,
                                                  const LevelLadder& ladder) {
  if (s > inst.capacity(j)) {
    return absl::InvalidArgumentError(
        absl::StrCat("bundle size ", s, " exceeds capacity ", inst.capacity(j)));
  }
  const int m = inst.num_workers();
  SetPolynomial h(m);
  if (s == 0) return h;  // W(empty) = 0 is below every level.
  for (uint64_t x = 0; x < (uint64_t{1} << m); ++x) {
    if (std::popcount(x) != s) continue;
    const BigInt v = FirmBundleValue(inst, j, x);
    if (level < ladder.num_levels() ? ladder.Reaches(v, level) : false) h.Set(x);
  }
  return h;
}

SetPolynomial CombinePolys(const PolyTable& h, const PolyTable& p_prev, int s,
                           int k, int capacity) {
  const int m = h.empty() || h[0].empty() ? 0 : h[0][0].num_vars();
  SetPolynomial out(m);
  for (int s1 = 1; s1 <= std::min(capacity, s); ++s1) {
    for (int k1 = 0; k1 <= k; ++k1) {
      const SetPolynomial& a = h[s1][k1];
      const SetPolynomial& b = p_prev[s - s1][k - k1];
      if (a.IsZero() || b.IsZero()) continue;
      AccumulateDisjointProducts(a, b, s, &out);
    }
  }
  return out;
}

namespace {

// h^j for every size and level from precomputed bundle levels.
PolyTable SingleFirmTable(const Instance& inst, int j, const LevelLadder& ladder) {
  const int m = inst.num_workers();
  const int cap = std::min(inst.capacity(j), m);
  PolyTable h(m + 1, std::vector<SetPolynomial>(ladder.num_levels(), SetPolynomial(m)));
  for (uint64_t x = 1; x < (uint64_t{1} << m); ++x) {
    const int s = std::popcount(x);
    if (s > cap) continue;
    const int top = ladder.LevelOf(FirmBundleValue(inst, j, x));
    for (int k = 0; k <= top; ++k) h[s][k].Set(x);
  }
  return h;
}

}  // namespace

absl::StatusOr<FptasResult> FptasPolymul(const Instance& inst, const Epsilon& eps,
                                         const FptasOptions& options) {
  if (eps.num() > eps.den()) {
    return absl::InvalidArgumentError("the set-polynomial scheme needs eps <= 1");
  }
  const int m = inst.num_workers();
  const int n = inst.num_firms();
  if (m > options.max_workers) {
    return absl::ResourceExhaustedError(absl::StrCat(
        "set-polynomial scheme limited to ", options.max_workers, " workers"));
  }
  FptasResult result;
  const BigInt eta = NashProductCeiling(inst);
  if (eta == 0) {
    result.solution = ZeroSolution(inst);
    return result;
  }
  const LevelLadder ladder(eps, eta);
  const int levels = ladder.num_levels();
  result.num_levels = levels;
  const int64_t poly_bytes = std::max<int64_t>(8, (int64_t{1} << (m + 1)) / 8);
  if (int64_t{2} * n * (m + 1) * levels * poly_bytes > options.max_table_bytes) {
    return absl::ResourceExhaustedError("set-polynomial tables exceed the memory budget");
  }

  std::vector<PolyTable> h(n), p(n);
  for (int j = 0; j < n; ++j) h[j] = SingleFirmTable(inst, j, ladder);
  p[0] = h[0];
  for (int j = 1; j < n; ++j) {
    p[j].assign(m + 1, std::vector<SetPolynomial>(levels, SetPolynomial(m)));
    for (int s = j + 1; s <= m; ++s) {
      for (int k = 0; k < levels; ++k) {
        p[j][s][k] = CombinePolys(h[j], p[j - 1], s, k, inst.capacity(j));
      }
    }
  }

  const uint64_t full = inst.all_workers();
  int best = -1;
  for (int k = levels - 1; k >= 0 && best < 0; --k) {
    if (p[n - 1][m][k].Contains(full)) best = k;
  }
  result.level = best;
  if (best < 0) {
    result.solution = ZeroSolution(inst);
    return result;
  }

  // Backtrack: peel firm j's bundle off in (size, level, subset) order.
  Matching mu = Matching::Empty(m);
  uint64_t x = full;
  int s = m, k = best;
  for (int j = n - 1; j >= 1; --j) {
    bool placed = false;
    for (int s1 = 1; s1 <= std::min(inst.capacity(j), s) && !placed; ++s1) {
      for (int k1 = 0; k1 <= k && !placed; ++k1) {
        const SetPolynomial& rest = p[j - 1][s - s1][k - k1];
        if (rest.IsZero()) continue;
        for (uint64_t y : h[j][s1][k1].Monomials()) {
          if ((y & ~x) != 0 || !rest.Contains(x ^ y)) continue;
          for (uint64_t b = y; b != 0; b &= b - 1) mu.assignment[std::countr_zero(b)] = j;
          x ^= y;
          s -= s1;
          k -= k1;
          placed = true;
          break;
        }
      }
    }
    if (!placed) return absl::InternalError("set-polynomial backtracking failed");
  }
  for (uint64_t b = x; b != 0; b &= b - 1) mu.assignment[std::countr_zero(b)] = 0;
  result.solution = MakeSolution(inst, std::move(mu));
  return result;
}

}  // namespace nsw
