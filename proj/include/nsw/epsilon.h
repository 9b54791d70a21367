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

// Approximation parameters as exact positive rationals, and the geometric
// ladder (1 + eps)^k compared exactly against integers.

#ifndef NSW_EPSILON_H_
#define NSW_EPSILON_H_

#include <cstdint>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "nsw/welfare.h"

namespace nsw {

// eps = num / den with num, den > 0, in lowest terms.
class Epsilon {
 public:
  static absl::StatusOr<Epsilon> Create(int64_t num, int64_t den);
  // Accepts "p/q" or a bare positive integer "p".
  static absl::StatusOr<Epsilon> Parse(absl::string_view text);

  int64_t num() const { return num_; }
  int64_t den() const { return den_; }
  double ToDouble() const { return static_cast<double>(num_) / den_; }
  std::string ToString() const;

  friend bool operator==(const Epsilon&, const Epsilon&) = default;

 private:
  Epsilon(int64_t num, int64_t den) : num_(num), den_(den) {}
  int64_t num_;
  int64_t den_;
};

// Levels k = 0, 1, ..., max_level standing for (1 + eps)^k.
class LevelLadder {
 public:
  // Covers every value up to `ceiling`: max_level is the largest k with
  // (1 + eps)^k <= max(ceiling, 1), plus one.
  LevelLadder(const Epsilon& eps, const BigInt& ceiling);

  int max_level() const { return max_level_; }
  int num_levels() const { return max_level_ + 1; }
  // (1 + eps)^k <= v, exactly.
  bool Reaches(const BigInt& v, int k) const;
  // Largest k <= max_level with (1 + eps)^k <= v; -1 when v < 1.
  int LevelOf(const BigInt& v) const;
  // num^k and den^k of (1 + eps)^k.
  const BigInt& PowerNum(int k) const { return num_pow_[k]; }
  const BigInt& PowerDen(int k) const { return den_pow_[k]; }

 private:
  void Extend(int k);

  int max_level_ = 0;
  std::vector<BigInt> num_pow_;
  std::vector<BigInt> den_pow_;
  BigInt base_num_;
  BigInt base_den_;
};

// Largest k >= 0 with (1 + eps)^k <= v, for v >= 1 (no cap).
int FloorLog(const Epsilon& eps, const BigInt& v);
// Smallest k >= 0 with (1 + eps)^k >= v, for v >= 1.
int CeilLog(const Epsilon& eps, const BigInt& v);

}  // namespace nsw

#endif  // NSW_EPSILON_H_
