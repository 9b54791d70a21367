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

// Two-sided many-to-one matching instances and matchings.
//
// An instance has m workers and n firms. Worker w values firm f at
// v_{w,f} >= 0 and firm f values worker w at v_{f,w} >= 0. Firm f accepts at
// most c_f workers and values a bundle additively. Both valuation matrices are
// stored densely; instances are immutable after construction.

#ifndef NSW_INSTANCE_H_
#define NSW_INSTANCE_H_

#include <cstdint>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"

namespace nsw {

using Value = int64_t;
using ValueMatrix = std::vector<std::vector<Value>>;

// Worker subsets are bitmasks over worker indices.
using WorkerSet = uint64_t;

inline constexpr int kUnmatched = -1;

class Instance {
 public:
  // `worker_vals` is m x n (row w holds v_{w,.}); `firm_vals` is n x m (row f
  // holds v_{f,.}). Requires m >= 1, n >= 1, nonnegative entries and matching
  // dimensions.
  static absl::StatusOr<Instance> Create(std::vector<int> capacities,
                                         ValueMatrix worker_vals,
                                         ValueMatrix firm_vals);

  int num_workers() const { return num_workers_; }
  int num_firms() const { return num_firms_; }
  int num_agents() const { return num_workers_ + num_firms_; }

  int capacity(int f) const { return capacities_[f]; }
  const std::vector<int>& capacities() const { return capacities_; }
  int total_capacity() const;
  int max_capacity() const;

  // v_{w,f}: how much worker w values firm f.
  Value worker_value(int w, int f) const { return worker_vals_[w][f]; }
  // v_{f,w}: how much firm f values worker w.
  Value firm_value(int f, int w) const { return firm_vals_[f][w]; }

  const ValueMatrix& worker_vals() const { return worker_vals_; }
  const ValueMatrix& firm_vals() const { return firm_vals_; }

  // Largest entry over both matrices.
  Value max_value() const { return max_value_; }

  // Number of distinct entries over both matrices (zeros included).
  int num_distinct_values() const;

  bool all_positive() const;

  WorkerSet all_workers() const {
    return num_workers_ >= 64 ? ~WorkerSet{0}
                              : (WorkerSet{1} << num_workers_) - 1;
  }

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  Instance() = default;

  int num_workers_ = 0;
  int num_firms_ = 0;
  std::vector<int> capacities_;
  ValueMatrix worker_vals_;
  ValueMatrix firm_vals_;
  Value max_value_ = 0;
};

// Per-worker firm assignment; entries are firm indices or kUnmatched.
struct Matching {
  std::vector<int> assignment;

  static Matching Empty(int num_workers) {
    return Matching{std::vector<int>(num_workers, kUnmatched)};
  }

  int firm_of(int w) const { return assignment[w]; }
  bool is_matched(int w) const { return assignment[w] != kUnmatched; }

  // Workers assigned to firm f, as a bitmask (requires m <= 64).
  WorkerSet bundle(int f) const;
  std::vector<int> bundle_sizes(int num_firms) const;

  friend bool operator==(const Matching&, const Matching&) = default;
};

// Degrees in the graph that keeps a worker-firm pair unless both sides value
// each other at zero.
struct DegreeProfile {
  std::vector<int> worker_degrees;
  std::vector<int> firm_degrees;
  int max_degree = 0;
};

// Whether the pair (w, f) survives removal of the "0--0" edges.
inline bool HasEdge(const Instance& inst, int w, int f) {
  return inst.worker_value(w, f) > 0 || inst.firm_value(f, w) > 0;
}

DegreeProfile ComputeDegreeProfile(const Instance& inst);

// Same shape; every positive valuation becomes 1.
Instance Binarize(const Instance& inst);

// Checks the index range of every entry and every capacity constraint.
// Reports the first violation found in worker order.
absl::Status Validate(const Instance& inst, const Matching& mu);

}  // namespace nsw

#endif  // NSW_INSTANCE_H_
