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

// Exact logarithms of positive rationals.
//
// A LogWeight stands for ln(P) / 2^k with P a positive rational. Sums become
// products, differences quotients, and halving takes an exact square root
// when one exists (otherwise k grows). Comparison is exact, so matching
// solvers running on LogWeight never see rounding ties.

#ifndef NSW_GRAPH_LOG_WEIGHT_H_
#define NSW_GRAPH_LOG_WEIGHT_H_

#include <compare>
#include <string>

#include "boost/multiprecision/cpp_int.hpp"
#include "nsw/graph/weighted_graph.h"

namespace nsw {

class LogWeight {
 public:
  using Rational = boost::multiprecision::cpp_rational;

  LogWeight() : p_(1), k_(0) {}  // ln 1 = 0.

  // ln(x) for a positive integer or rational x.
  static LogWeight Log(const Rational& x);

  LogWeight operator+(const LogWeight& o) const;
  LogWeight operator-(const LogWeight& o) const;
  LogWeight operator-() const;
  LogWeight& operator+=(const LogWeight& o) { return *this = *this + o; }
  LogWeight& operator-=(const LogWeight& o) { return *this = *this - o; }

  LogWeight Half() const;
  LogWeight Twice() const;

  bool IsZero() const { return p_ == 1; }
  double ToDouble() const;
  std::string DebugString() const;

  friend bool operator==(const LogWeight& a, const LogWeight& b) {
    return Compare(a, b) == 0;
  }
  friend std::strong_ordering operator<=>(const LogWeight& a,
                                          const LogWeight& b) {
    return Compare(a, b) <=> 0;
  }

 private:
  LogWeight(Rational p, int k) : p_(std::move(p)), k_(k) { Normalize(); }

  static int Compare(const LogWeight& a, const LogWeight& b);
  // P raised to 2^(target - k).
  Rational RaisedTo(int target) const;
  void Normalize();

  Rational p_;
  int k_;
};

template <>
struct WeightTraits<LogWeight> {
  static LogWeight Zero() { return LogWeight(); }
  static LogWeight Half(const LogWeight& x) { return x.Half(); }
  static LogWeight Twice(const LogWeight& x) { return x.Twice(); }
  static bool IsNonPositive(const LogWeight& x) { return x <= LogWeight(); }
  static bool IsZero(const LogWeight& x) { return x.IsZero(); }
  static double ToDouble(const LogWeight& x) { return x.ToDouble(); }
};

}  // namespace nsw

#endif  // NSW_GRAPH_LOG_WEIGHT_H_
