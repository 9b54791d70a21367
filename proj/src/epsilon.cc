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

#include "nsw/epsilon.h"

#include <numeric>

#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_split.h"

namespace nsw {

absl::StatusOr<Epsilon> Epsilon::Create(int64_t num, int64_t den) {
  if (num <= 0 || den <= 0) {
    return absl::InvalidArgumentError(
        absl::StrCat("eps must be a positive rational, got ", num, "/", den));
  }
  const int64_t g = std::gcd(num, den);
  return Epsilon(num / g, den / g);
}

absl::StatusOr<Epsilon> Epsilon::Parse(absl::string_view text) {
  std::vector<absl::string_view> parts = absl::StrSplit(text, '/');
  int64_t num = 0, den = 1;
  if (parts.size() > 2 || !absl::SimpleAtoi(parts[0], &num) ||
      (parts.size() == 2 && !absl::SimpleAtoi(parts[1], &den))) {
    return absl::InvalidArgumentError(
        absl::StrCat("eps must look like p/q, got '", text, "'"));
  }
  return Create(num, den);
}

std::string Epsilon::ToString() const { return absl::StrCat(num_, "/", den_); }

LevelLadder::LevelLadder(const Epsilon& eps, const BigInt& ceiling)
    : base_num_(eps.num() + eps.den()), base_den_(eps.den()) {
  num_pow_.push_back(1);
  den_pow_.push_back(1);
  const BigInt top = ceiling < 1 ? BigInt(1) : ceiling;
  int k = 0;
  while (true) {
    Extend(k + 1);
    if (top * den_pow_[k + 1] < num_pow_[k + 1]) break;
    ++k;
  }
  max_level_ = k + 1;
}

void LevelLadder::Extend(int k) {
  while (static_cast<int>(num_pow_.size()) <= k) {
    num_pow_.push_back(num_pow_.back() * base_num_);
    den_pow_.push_back(den_pow_.back() * base_den_);
  }
}

bool LevelLadder::Reaches(const BigInt& v, int k) const {
  return v * den_pow_[k] >= num_pow_[k];
}

int LevelLadder::LevelOf(const BigInt& v) const {
  if (v < 1) return -1;
  int lo = 0, hi = max_level_;  // Reaches(v, lo) holds.
  while (lo < hi) {
    const int mid = (lo + hi + 1) / 2;
    if (Reaches(v, mid)) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return lo;
}

int FloorLog(const Epsilon& eps, const BigInt& v) {
  BigInt num = 1, den = 1;
  int k = 0;
  while (true) {
    num *= eps.num() + eps.den();
    den *= eps.den();
    if (v * den < num) return k;
    ++k;
  }
}

int CeilLog(const Epsilon& eps, const BigInt& v) {
  BigInt num = 1, den = 1;
  int k = 0;
  while (num < v * den) {
    num *= eps.num() + eps.den();
    den *= eps.den();
    ++k;
  }
  return k;
}

}  // namespace nsw
