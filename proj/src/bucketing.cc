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

#include "nsw/bucketing.h"

#include <algorithm>
#include <map>
#include <utility>

#include "absl/strings/str_cat.h"
#include "nsw/graph/flow.h"

namespace nsw {
namespace {

struct WorkerClass {
  std::vector<int> members;
  Value max_worker_value = 0;  // Largest v_{w,f} over members.
  Value max_firm_value = 0;    // Largest v_{f,w} over members.
};

class ClassCountSearch {
 public:
  ClassCountSearch(const Instance& inst,
                   const std::vector<std::vector<int>>& class_of,
                   int64_t max_guesses)
      : inst_(inst), max_guesses_(max_guesses) {
    const int n = inst.num_firms();
    classes_.resize(n);
    counts_.resize(n);
    for (int f = 0; f < n; ++f) {
      std::map<int, int> index;  // Caller id -> dense id, in id order.
      for (int w = 0; w < inst.num_workers(); ++w) {
        if (class_of[f][w] >= 0) index.emplace(class_of[f][w], 0);
      }
      int next = 0;
      for (auto& [id, dense] : index) dense = next++;
      classes_[f].resize(next);
      for (int w = 0; w < inst.num_workers(); ++w) {
        if (class_of[f][w] < 0) continue;
        WorkerClass& c = classes_[f][index[class_of[f][w]]];
        c.members.push_back(w);
        c.max_worker_value = std::max(c.max_worker_value, inst.worker_value(w, f));
        c.max_firm_value = std::max(c.max_firm_value, inst.firm_value(f, w));
      }
      counts_[f].assign(next, 0);
    }
    suffix_capacity_.assign(n + 1, 0);
    for (int f = n - 1; f >= 0; --f) {
      suffix_capacity_[f] = suffix_capacity_[f + 1] + inst.capacity(f);
    }
  }

  absl::Status Run() {
    FirmLevel(0, 0);
    if (exhausted_) {
      return absl::ResourceExhaustedError(
          absl::StrCat("bucket guessing exceeded ", max_guesses_, " guesses"));
    }
    return absl::OkStatus();
  }

  bool found() const { return found_; }
  const Matching& best() const { return best_; }
  const BucketSearchStats& stats() const { return stats_; }

 private:
  // Chooses the count vector of firm f; `placed` workers are already used.
  void FirmLevel(int f, int placed) {
    if (exhausted_) return;
    if (f == inst_.num_firms()) {
      if (placed == inst_.num_workers()) Leaf();
      return;
    }
    ClassLevel(f, 0, placed, 0, false);
  }

  void ClassLevel(int f, int k, int placed, int firm_total, bool valued) {
    if (exhausted_) return;
    const auto& classes = classes_[f];
    if (k == static_cast<int>(classes.size())) {
      // Nonzero firm utility needs a worker the firm values.
      if (!valued) return;
      if (placed + suffix_capacity_[f + 1] < inst_.num_workers()) return;
      if (++stats_.guesses > max_guesses_) {
        exhausted_ = true;
        return;
      }
      if (!Realize(f + 1, nullptr)) return;
      FirmLevel(f + 1, placed);
      return;
    }
    const int limit = std::min<int>(
        {static_cast<int>(classes[k].members.size()),
         inst_.capacity(f) - firm_total, inst_.num_workers() - placed});
    for (int c = 0; c <= limit && !exhausted_; ++c) {
      counts_[f][k] = c;
      ClassLevel(f, k + 1, placed + c, firm_total + c,
                 valued || (c > 0 && classes[k].max_firm_value > 0));
    }
    counts_[f][k] = 0;
  }

  // Whether the counts of firms [0, num_firms) can be filled simultaneously;
  // if `out` is set, writes one realization.
  bool Realize(int num_firms, Matching* out) const {
    const int m = inst_.num_workers();
    MaxFlow mf(m + 2);
    const int source = m, sink = m + 1;
    for (int w = 0; w < m; ++w) mf.AddArc(source, w, 1);
    FlowQuantity demand = 0;
    struct Slot {
      int arc, w, f;
    };
    std::vector<Slot> slots;
    for (int f = 0; f < num_firms; ++f) {
      for (int k = 0; k < static_cast<int>(classes_[f].size()); ++k) {
        const int count = counts_[f][k];
        if (count == 0) continue;
        const int node = mf.AddNode();
        for (int w : classes_[f][k].members) {
          slots.push_back({mf.AddArc(w, node, 1), w, f});
        }
        mf.AddArc(node, sink, count);
        demand += count;
      }
    }
    if (mf.Solve(source, sink) != demand) return false;
    if (out != nullptr) {
      *out = Matching::Empty(m);
      for (const Slot& s : slots) {
        if (mf.Flow(s.arc) > 0) out->assignment[s.w] = s.f;
      }
    }
    return true;
  }

  void Leaf() {
    // Optimistic product from the class maxima.
    BigInt bound = 1;
    for (int f = 0; f < inst_.num_firms(); ++f) {
      Value firm = 0;
      for (int k = 0; k < static_cast<int>(classes_[f].size()); ++k) {
        const int c = counts_[f][k];
        if (c == 0) continue;
        firm += c * classes_[f][k].max_firm_value;
        bound *= boost::multiprecision::pow(BigInt(classes_[f][k].max_worker_value), c);
      }
      bound *= firm;
    }
    if (found_ && bound <= best_value_.product()) return;
    Matching mu;
    if (!Realize(inst_.num_firms(), &mu)) return;
    ++stats_.realized;
    NashValue v = ComputeNashValue(inst_, mu);
    if (v.is_zero()) return;
    if (!found_ || v > best_value_) {
      found_ = true;
      best_ = std::move(mu);
      best_value_ = std::move(v);
    }
  }

  const Instance& inst_;
  const int64_t max_guesses_;
  std::vector<std::vector<WorkerClass>> classes_;
  std::vector<std::vector<int>> counts_;
  std::vector<int> suffix_capacity_;
  Matching best_;
  NashValue best_value_;
  bool found_ = false;
  bool exhausted_ = false;
  BucketSearchStats stats_;
};

}  // namespace

absl::StatusOr<Solution> SolveByClassCounts(
    const Instance& inst, const std::vector<std::vector<int>>& class_of,
    int64_t max_guesses, BucketSearchStats* stats) {
  ClassCountSearch search(inst, class_of, max_guesses);
  absl::Status status = search.Run();
  if (stats != nullptr) *stats = search.stats();
  if (!status.ok()) return status;
  if (!search.found()) return ZeroSolution(inst);
  return MakeSolution(inst, search.best());
}

}  // namespace nsw
