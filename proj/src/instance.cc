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

#include "nsw/instance.h"

#include <algorithm>
#include <set>
#include <utility>

#include "absl/strings/str_cat.h"

namespace nsw {

absl::StatusOr<Instance> Instance::Create(std::vector<int> capacities,
                                          ValueMatrix worker_vals,
                                          ValueMatrix firm_vals) {
  const int n = static_cast<int>(capacities.size());
  const int m = static_cast<int>(worker_vals.size());
  if (m == 0) return absl::InvalidArgumentError("instance has no workers");
  if (n == 0) return absl::InvalidArgumentError("instance has no firms");
  if (static_cast<int>(firm_vals.size()) != n) {
    return absl::InvalidArgumentError(
        absl::StrCat("firm_vals has ", firm_vals.size(), " rows, expected ", n));
  }
  Value vmax = 0;
  for (int f = 0; f < n; ++f) {
    if (capacities[f] < 0) {
      return absl::InvalidArgumentError(
          absl::StrCat("negative capacity for firm ", f));
    }
    if (static_cast<int>(firm_vals[f].size()) != m) {
      return absl::InvalidArgumentError(absl::StrCat(
          "firm_vals row ", f, " has ", firm_vals[f].size(), " entries, expected ", m));
    }
    for (Value v : firm_vals[f]) {
      if (v < 0) return absl::InvalidArgumentError("negative firm valuation");
      vmax = std::max(vmax, v);
    }
  }
  for (int w = 0; w < m; ++w) {
    if (static_cast<int>(worker_vals[w].size()) != n) {
      return absl::InvalidArgumentError(absl::StrCat(
          "worker_vals row ", w, " has ", worker_vals[w].size(),
          " entries, expected ", n));
    }
    for (Value v : worker_vals[w]) {
      if (v < 0) return absl::InvalidArgumentError("negative worker valuation");
      vmax = std::max(vmax, v);
    }
  }
  Instance inst;
  inst.num_workers_ = m;
  inst.num_firms_ = n;
  inst.capacities_ = std::move(capacities);
  inst.worker_vals_ = std::move(worker_vals);
  inst.firm_vals_ = std::move(firm_vals);
  inst.max_value_ = vmax;
  return inst;
}

int Instance::total_capacity() const {
  int total = 0;
  for (int c : capacities_) total += c;
  return total;
}

int Instance::max_capacity() const {
  return *std::max_element(capacities_.begin(), capacities_.end());
}

int Instance::num_distinct_values() const {
  std::set<Value> seen;
  for (const auto& row : worker_vals_) seen.insert(row.begin(), row.end());
  for (const auto& row : firm_vals_) seen.insert(row.begin(), row.end());
  return static_cast<int>(seen.size());
}

bool Instance::all_positive() const {
  for (const auto& row : worker_vals_) {
    for (Value v : row) {
      if (v <= 0) return false;
    }
  }
  for (const auto& row : firm_vals_) {
    for (Value v : row) {
      if (v <= 0) return false;
    }
  }
  return true;
}

WorkerSet Matching::bundle(int f) const {
  WorkerSet s = 0;
  for (int w = 0; w < static_cast<int>(assignment.size()); ++w) {
    if (assignment[w] == f) s |= WorkerSet{1} << w;
  }
  return s;
}

std::vector<int> Matching::bundle_sizes(int num_firms) const {
  std::vector<int> sizes(num_firms, 0);
  for (int f : assignment) {
    if (f >= 0 && f < num_firms) ++sizes[f];
  }
  return sizes;
}

DegreeProfile ComputeDegreeProfile(const Instance& inst) {
  DegreeProfile p;
  p.worker_degrees.assign(inst.num_workers(), 0);
  p.firm_degrees.assign(inst.num_firms(), 0);
  for (int w = 0; w < inst.num_workers(); ++w) {
    for (int f = 0; f < inst.num_firms(); ++f) {
      if (!HasEdge(inst, w, f)) continue;
      ++p.worker_degrees[w];
      ++p.firm_degrees[f];
    }
  }
  for (int d : p.worker_degrees) p.max_degree = std::max(p.max_degree, d);
  for (int d : p.firm_degrees) p.max_degree = std::max(p.max_degree, d);
  return p;
}

Instance Binarize(const Instance& inst) {
  ValueMatrix wv = inst.worker_vals();
  ValueMatrix fv = inst.firm_vals();
  for (auto& row : wv) {
    for (Value& v : row) v = v > 0 ? 1 : 0;
  }
  for (auto& row : fv) {
    for (Value& v : row) v = v > 0 ? 1 : 0;
  }
  return *Instance::Create(inst.capacities(), std::move(wv), std::move(fv));
}

absl::Status Validate(const Instance& inst, const Matching& mu) {
  if (static_cast<int>(mu.assignment.size()) != inst.num_workers()) {
    return absl::InvalidArgumentError(
        absl::StrCat("matching has ", mu.assignment.size(),
                     " entries, instance has ", inst.num_workers(), " workers"));
  }
  std::vector<int> load(inst.num_firms(), 0);
  for (int w = 0; w < inst.num_workers(); ++w) {
    const int f = mu.assignment[w];
    if (f == kUnmatched) continue;
    if (f < 0 || f >= inst.num_firms()) {
      return absl::OutOfRangeError(
          absl::StrCat("worker ", w, " assigned to firm ", f,
                       " outside [0, ", inst.num_firms(), ")"));
    }
    if (++load[f] > inst.capacity(f)) {
      return absl::FailedPreconditionError(
          absl::StrCat("firm ", f, " exceeds capacity ", inst.capacity(f)));
    }
  }
  return absl::OkStatus();
}

}  // namespace nsw
