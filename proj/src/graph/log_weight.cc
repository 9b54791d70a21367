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

#include "nsw/graph/log_weight.h"

#include <cassert>
#include <cmath>
#include <utility>

#include "absl/strings/str_cat.h"
#include "nsw/welfare.h"

namespace nsw {
namespace {

using Rational = LogWeight::Rational;

bool ExactSqrt(const BigInt& x, BigInt* root) {
  BigInt r = boost::multiprecision::sqrt(x);
  if (r * r != x) return false;
  *root = std::move(r);
  return true;
}

Rational Square(const Rational& x) { return x * x; }

}  // namespace

LogWeight LogWeight::Log(const Rational& x) {
  assert(x > 0);
  return LogWeight(x, 0);
}

void LogWeight::Normalize() {
  while (k_ > 0) {
    BigInt num, den;
    if (!ExactSqrt(boost::multiprecision::numerator(p_), &num) ||
        !ExactSqrt(boost::multiprecision::denominator(p_), &den)) {
      return;
    }
    p_ = Rational(num, den);
    --k_;
  }
}

Rational LogWeight::RaisedTo(int target) const {
  Rational r = p_;
  for (int i = k_; i < target; ++i) r = Square(r);
  return r;
}

LogWeight LogWeight::operator+(const LogWeight& o) const {
  const int k = std::max(k_, o.k_);
  return LogWeight(RaisedTo(k) * o.RaisedTo(k), k);
}

LogWeight LogWeight::operator-(const LogWeight& o) const {
  const int k = std::max(k_, o.k_);
  return LogWeight(RaisedTo(k) / o.RaisedTo(k), k);
}

LogWeight LogWeight::operator-() const { return LogWeight(1 / p_, k_); }

LogWeight LogWeight::Half() const { return LogWeight(p_, k_ + 1); }

LogWeight LogWeight::Twice() const {
  if (k_ > 0) return LogWeight(p_, k_ - 1);
  return LogWeight(Square(p_), 0);
}

int LogWeight::Compare(const LogWeight& a, const LogWeight& b) {
  const int k = std::max(a.k_, b.k_);
  const Rational x = a.RaisedTo(k);
  const Rational y = b.RaisedTo(k);
  return x < y ? -1 : (x > y ? 1 : 0);
}

double LogWeight::ToDouble() const {
  const double ln = LogBigInt(boost::multiprecision::numerator(p_)) -
                    LogBigInt(boost::multiprecision::denominator(p_));
  return std::ldexp(ln, -k_);
}

std::string LogWeight::DebugString() const {
  return absl::StrCat("ln(", p_.str(), ")/2^", k_);
}

}  // namespace nsw
