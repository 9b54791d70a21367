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

// Agent utilities and welfare measures.
//
// Nash products are exact big integers; the log-domain welfare is carried
// along for reporting only and never drives a comparison.

#ifndef NSW_WELFARE_H_
#define NSW_WELFARE_H_

#include <compare>
#include <string>

#include "boost/multiprecision/cpp_int.hpp"
#include "nsw/instance.h"

namespace nsw {

using BigInt = boost::multiprecision::cpp_int;

class NashValue {
 public:
  NashValue() = default;  // Zero.

  // log_welfare is recomputed from the product and the agent count.
  static NashValue FromProduct(BigInt product, int num_agents);

  const BigInt& product() const { return product_; }
  bool is_zero() const { return product_ == 0; }
  // (1/(n+m)) * sum of ln u_i; 0 when the product is zero.
  double log_welfare() const { return log_welfare_; }
  // Geometric mean of the utilities (0 when the product is zero).
  double welfare() const;
  std::string ProductString() const { return product_.str(); }

  friend bool operator==(const NashValue& a, const NashValue& b) {
    return a.product_ == b.product_;
  }
  friend std::strong_ordering operator<=>(const NashValue& a,
                                          const NashValue& b) {
    if (a.product_ < b.product_) return std::strong_ordering::less;
    if (a.product_ > b.product_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  BigInt product_ = 0;
  double log_welfare_ = 0.0;
};

// Natural log of a positive big integer, accurate to double precision.
double LogBigInt(const BigInt& x);

Value UtilityOfWorker(const Instance& inst, const Matching& mu, int w);
Value UtilityOfFirm(const Instance& inst, const Matching& mu, int f);
NashValue ComputeNashValue(const Instance& inst, const Matching& mu);
Value UtilitarianWelfare(const Instance& inst, const Matching& mu);

// v_f(S): additive firm value of a bundle.
Value FirmValue(const Instance& inst, int f, WorkerSet s);

// W_f(S) = v_f(S) * prod_{w in S} v_{w,f}; zero for the empty bundle.
BigInt FirmBundleValue(const Instance& inst, int f, WorkerSet s);

// A solver's answer: the matching and its exact value.
struct Solution {
  Matching matching;
  NashValue value;
};

Solution MakeSolution(const Instance& inst, Matching mu);

// Solvers report a zero optimum with the empty matching, the
// lexicographically smallest assignment.
Solution ZeroSolution(const Instance& inst);

}  // namespace nsw

#endif  // NSW_WELFARE_H_
