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

#include "nsw/set_polynomial.h"

#include <bit>

namespace nsw {
namespace {

size_t NumWords(int num_vars) {
  const uint64_t bits = uint64_t{1} << (num_vars + 1);
  return static_cast<size_t>((bits + 63) / 64);
}

// out |= (src << shift), truncated to out's length.
void OrShifted(const std::vector<uint64_t>& src, uint64_t shift,
               std::vector<uint64_t>& out) {
  const size_t word_shift = shift / 64;
  const unsigned bit_shift = shift % 64;
  const size_t n = out.size();
  for (size_t i = 0; i + word_shift < n && i < src.size(); ++i) {
    const uint64_t w = src[i];
    if (w == 0) continue;
    out[i + word_shift] |= w << bit_shift;
    if (bit_shift != 0 && i + word_shift + 1 < n) {
      out[i + word_shift + 1] |= w >> (64 - bit_shift);
    }
  }
}

// Words selecting the exponents of popcount `weight`, cached per thread.
const std::vector<uint64_t>& WeightMask(int num_vars, int weight) {
  thread_local std::vector<std::vector<std::vector<uint64_t>>> cache;
  if (static_cast<int>(cache.size()) <= num_vars) cache.resize(num_vars + 1);
  auto& per_weight = cache[num_vars];
  if (per_weight.empty()) {
    per_weight.assign(num_vars + 2, std::vector<uint64_t>(NumWords(num_vars), 0));
    const uint64_t bits = uint64_t{1} << (num_vars + 1);
    for (uint64_t e = 0; e < bits; ++e) {
      per_weight[std::popcount(e)][e / 64] |= uint64_t{1} << (e % 64);
    }
  }
  return per_weight[weight];
}

}  // namespace

SetPolynomial::SetPolynomial(int num_vars)
    : num_vars_(num_vars), words_(NumWords(num_vars), 0) {}

void SetPolynomial::Set(uint64_t e) { words_[e / 64] |= uint64_t{1} << (e % 64); }

bool SetPolynomial::Contains(uint64_t e) const {
  if (e / 64 >= words_.size()) return false;
  return words_[e / 64] >> (e % 64) & 1;
}

bool SetPolynomial::IsZero() const {
  for (uint64_t w : words_) {
    if (w != 0) return false;
  }
  return true;
}

std::vector<uint64_t> SetPolynomial::Monomials() const {
  std::vector<uint64_t> out;
  for (size_t i = 0; i < words_.size(); ++i) {
    for (uint64_t w = words_[i]; w != 0; w &= w - 1) {
      out.push_back(64 * i + std::countr_zero(w));
    }
  }
  return out;
}

int64_t SetPolynomial::NumMonomials() const {
  int64_t total = 0;
  for (uint64_t w : words_) total += std::popcount(w);
  return total;
}

SetPolynomial& SetPolynomial::operator|=(const SetPolynomial& other) {
  for (size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

SetPolynomial SetPolynomial::Multiply(const SetPolynomial& a, const SetPolynomial& b) {
  SetPolynomial out(a.num_vars_);
  for (uint64_t e : a.Monomials()) OrShifted(b.words_, e, out.words_);
  return out;
}

SetPolynomial SetPolynomial::HammingProjection(int weight) const {
  SetPolynomial out(num_vars_);
  if (weight < 0 || weight > num_vars_ + 1) return out;
  const std::vector<uint64_t>& mask = WeightMask(num_vars_, weight);
  for (size_t i = 0; i < words_.size(); ++i) out.words_[i] = words_[i] & mask[i];
  return out;
}

void AccumulateDisjointProducts(const SetPolynomial& a, const SetPolynomial& b,
                                int weight, SetPolynomial* out) {
  *out |= SetPolynomial::Multiply(a, b).HammingProjection(weight).Representative();
}

}  // namespace nsw
