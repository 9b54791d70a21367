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

// Boolean-coefficient polynomials whose monomials y^e are indexed by worker
// subsets: e is the characteristic vector of the subset read as an integer.
//
// Multiplying y^a by y^b yields y^(a+b). When the subsets are disjoint the
// sum has no carries, so its Hamming weight is |A| + |B|; any overlap
// produces a carry and strictly lowers the weight. Projecting a product onto
// weight |A| + |B| therefore keeps exactly the disjoint unions. Sums of two
// exponents below 2^m stay below 2^(m+1), so coefficients live in a bitset
// of 2^(m+1) bits whose upper half only ever holds transient carries.

#ifndef NSW_SET_POLYNOMIAL_H_
#define NSW_SET_POLYNOMIAL_H_

#include <cstdint>
#include <vector>

#include "nsw/instance.h"

namespace nsw {

class SetPolynomial {
 public:
  SetPolynomial() : SetPolynomial(0) {}
  explicit SetPolynomial(int num_vars);

  int num_vars() const { return num_vars_; }

  void Set(uint64_t exponent);
  bool Contains(uint64_t exponent) const;
  bool IsZero() const;
  // Monomial exponents in increasing order (overflow region included).
  std::vector<uint64_t> Monomials() const;
  int64_t NumMonomials() const;

  // Union of monomial sets (coefficients are boolean, so addition then
  // clamping to {0,1} is a bitwise OR).
  SetPolynomial& operator|=(const SetPolynomial& other);

  // Full product with boolean coefficients, by shifted ORs of `b` for every
  // monomial of `a`.
  static SetPolynomial Multiply(const SetPolynomial& a, const SetPolynomial& b);

  // Coefficient clamp to {0, 1}. Coefficients are stored as bits, so this is
  // the identity; kept so call sites mirror the algorithm.
  SetPolynomial Representative() const { return *this; }

  // Keeps monomials whose exponent has exactly `weight` one-bits.
  SetPolynomial HammingProjection(int weight) const;

  friend bool operator==(const SetPolynomial&, const SetPolynomial&) = default;

 private:
  int num_vars_;
  // Bit e of the concatenated words is the coefficient of y^e, e < 2^(m+1).
  std::vector<uint64_t> words_;
};

// out |= HammingProjection(Multiply(a, b), weight).
void AccumulateDisjointProducts(const SetPolynomial& a, const SetPolynomial& b,
                                int weight, SetPolynomial* out);

}  // namespace nsw

#endif  // NSW_SET_POLYNOMIAL_H_
