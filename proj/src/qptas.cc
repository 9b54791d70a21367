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
#include <map>

#include "absl/strings/str_cat.h"
#include "nsw/approx.h"
#include "nsw/bucketing.h"

namespace nsw {

QptasBuckets::QptasBuckets(const Epsilon& eps, Value v_max)
    : eps_(eps), tau_(std::max(1, CeilLog(eps, BigInt(std::max<Value>(v_max, 1))))) {}

int QptasBuckets::Of(Value v) const {
  if (v <= 0) return 0;
  return std::min(tau_, FloorLog(eps_, BigInt(v)) + 1);
}

absl::StatusOr<Solution> QptasBucketing(const Instance& inst, const Epsilon& eps,
                                        const QptasOptions& options) {
  if (inst.num_firms() > options.max_firms) {
    return absl::FailedPreconditionError(absl::StrCat(
        "bucketing scheme limited to ", options.max_firms, " firms"));
  }
  const QptasBuckets buckets(eps, inst.max_value());
  std::map<Value, int> bucket_of;  // Memoized per distinct value.
  auto bucket = [&](Value v) {
    auto [it, inserted] = bucket_of.emplace(v, 0);
    if (inserted) it->second = buckets.Of(v);
    return it->second;
  };
  const int width = buckets.tau() + 1;
  std::vector<std::vector<int>> class_of(inst.num_firms(),
                                         std::vector<int>(inst.num_workers(), -1));
  for (int f = 0; f < inst.num_firms(); ++f) {
    for (int w = 0; w < inst.num_workers(); ++w) {
      const Value vw = inst.worker_value(w, f);
      if (vw == 0) continue;  // Such a worker can never sit at f.
      class_of[f][w] = bucket(vw) * width + bucket(inst.firm_value(f, w));
    }
  }
  return SolveByClassCounts(inst, class_of, options.max_guesses);
}

}  // namespace nsw
