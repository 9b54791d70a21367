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

#include "nsw/oracle.h"

#include <utility>
#include <vector>

#include "absl/strings/str_cat.h"

namespace nsw {
namespace {

class Enumerator {
 public:
  Enumerator(const Instance& inst, int64_t limit, bool stop_at_first)
      : inst_(inst),
        limit_(limit),
        stop_at_first_(stop_at_first),
        assignment_(inst.num_workers(), kUnmatched),
        load_(inst.num_firms(), 0),
        firm_utility_(inst.num_firms(), 0) {}

  absl::Status Run() {
    Recurse(0);
    if (exhausted_) {
      return absl::ResourceExhaustedError(
          absl::StrCat("oracle enumeration exceeded ", limit_, " assignments"));
    }
    return absl::OkStatus();
  }

  bool found() const { return found_; }
  const std::vector<int>& best() const { return best_; }
  const BigInt& best_product() const { return best_product_; }
  int64_t count() const { return count_; }

 private:
  bool Done() const { return exhausted_ || (stop_at_first_ && found_); }

  void Recurse(int w) {
    if (Done()) return;
    const int n = inst_.num_firms();
    if (w == inst_.num_workers()) {
      if (++count_ > limit_) {
        exhausted_ = true;
        return;
      }
      Score();
      return;
    }
    // Firms that still need a positively valued worker cannot outnumber the
    // workers left to place.
    int starving = 0;
    for (int f = 0; f < n; ++f) starving += firm_utility_[f] == 0;
    if (starving > inst_.num_workers() - w) return;
    for (int f = 0; f < n && !Done(); ++f) {
      if (inst_.worker_value(w, f) == 0 || load_[f] == inst_.capacity(f)) {
        continue;
      }
      const Value gain = inst_.firm_value(f, w);
      if (gain == 0 && firm_utility_[f] == 0 && load_[f] + 1 == inst_.capacity(f)) {
        continue;  // Full with zero utility.
      }
      assignment_[w] = f;
      ++load_[f];
      firm_utility_[f] += gain;
      Recurse(w + 1);
      firm_utility_[f] -= gain;
      --load_[f];
      assignment_[w] = kUnmatched;
    }
  }

  void Score() {
    BigInt p = 1;
    for (int f = 0; f < inst_.num_firms(); ++f) {
      if (firm_utility_[f] == 0) return;
      p *= firm_utility_[f];
    }
    for (int w = 0; w < inst_.num_workers(); ++w) {
      p *= inst_.worker_value(w, assignment_[w]);
    }
    // Branches are visited in lexicographic order, so strict improvement
    // keeps the smallest optimal assignment.
    if (!found_ || p > best_product_) {
      found_ = true;
      best_product_ = std::move(p);
      best_ = assignment_;
    }
  }

  const Instance& inst_;
  const int64_t limit_;
  const bool stop_at_first_;
  std::vector<int> assignment_;
  std::vector<int> load_;
  std::vector<Value> firm_utility_;
  std::vector<int> best_;
  BigInt best_product_ = 0;
  bool found_ = false;
  bool exhausted_ = false;
  int64_t count_ = 0;
};

}  // namespace

absl::StatusOr<OracleResult> SolveBruteForce(const Instance& inst,
                                             int64_t limit) {
  Enumerator e(inst, limit, /*stop_at_first=*/false);
  if (absl::Status s = e.Run(); !s.ok()) return s;
  OracleResult r;
  r.num_enumerated = e.count();
  r.best = e.found() ? Matching{e.best()} : Matching::Empty(inst.num_workers());
  r.value = ComputeNashValue(inst, r.best);
  return r;
}

absl::StatusOr<std::optional<Matching>> ExistsNonzeroBruteForce(
    const Instance& inst, int64_t limit) {
  Enumerator e(inst, limit, /*stop_at_first=*/true);
  if (absl::Status s = e.Run(); !s.ok()) return s;
  if (!e.found()) return std::optional<Matching>();
  return std::optional<Matching>(Matching{e.best()});
}

}  // namespace nsw
