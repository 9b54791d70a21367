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

#include "nsw/welfare.h"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace nsw {

double LogBigInt(const BigInt& x) {
  // Keep the top 53 bits and account for the shifted-away exponent.
  const unsigned bits = boost::multiprecision::msb(x) + 1;
  if (bits <= 60) return std::log(static_cast<double>(x.convert_to<uint64_t>()));
  const unsigned shift = bits - 60;
  const BigInt top = x >> shift;
  return std::log(static_cast<double>(top.convert_to<uint64_t>())) +
         shift * std::log(2.0);
}

NashValue NashValue::FromProduct(BigInt product, int num_agents) {
  NashValue v;
  v.product_ = std::move(product);
  if (v.product_ > 0) v.log_welfare_ = LogBigInt(v.product_) / num_agents;
  return v;
}

double NashValue::welfare() const {
  return is_zero() ? 0.0 : std::exp(log_welfare_);
}

Value UtilityOfWorker(const Instance& inst, const Matching& mu, int w) {
  const int f = mu.assignment.at(w);
  return f == kUnmatched ? 0 : inst.worker_value(w, f);
}

Value UtilityOfFirm(const Instance& inst, const Matching& mu, int f) {
  if (f < 0 || f >= inst.num_firms()) throw std::out_of_range("firm index");
  Value u = 0;
  for (int w = 0; w < inst.num_workers(); ++w) {
    if (mu.assignment[w] == f) u += inst.firm_value(f, w);
  }
  return u;
}

NashValue ComputeNashValue(const Instance& inst, const Matching& mu) {
  BigInt p = 1;
  for (int w = 0; w < inst.num_workers() && p != 0; ++w) {
    p *= UtilityOfWorker(inst, mu, w);
  }
  for (int f = 0; f < inst.num_firms() && p != 0; ++f) {
    p *= UtilityOfFirm(inst, mu, f);
  }
  return NashValue::FromProduct(std::move(p), inst.num_agents());
}

Value UtilitarianWelfare(const Instance& inst, const Matching& mu) {
  Value total = 0;
  for (int w = 0; w < inst.num_workers(); ++w) {
    total += UtilityOfWorker(inst, mu, w);
  }
  for (int f = 0; f < inst.num_firms(); ++f) total += UtilityOfFirm(inst, mu, f);
  return total;
}

Value FirmValue(const Instance& inst, int f, WorkerSet s) {
  Value total = 0;
  for (; s != 0; s &= s - 1) total += inst.firm_value(f, std::countr_zero(s));
  return total;
}

BigInt FirmBundleValue(const Instance& inst, int f, WorkerSet s) {
  BigInt p = FirmValue(inst, f, s);
  for (; s != 0 && p != 0; s &= s - 1) {
    p *= inst.worker_value(std::countr_zero(s), f);
  }
  return p;
}

Solution MakeSolution(const Instance& inst, Matching mu) {
  NashValue v = ComputeNashValue(inst, mu);
  return Solution{std::move(mu), std::move(v)};
}

Solution ZeroSolution(const Instance& inst) {
  return Solution{Matching::Empty(inst.num_workers()), NashValue()};
}

}  // namespace nsw
