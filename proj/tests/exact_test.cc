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

#include <bit>
#include <random>

#include "gtest/gtest.h"
#include "nsw/exact.h"
#include "nsw/oracle.h"
#include "testing/brute_force.h"

namespace nsw {
namespace {

using ::nsw::testing::CrossedPairInstance;
using ::nsw::testing::RandomInstance;
using ::nsw::testing::RandomSpec;
using ::nsw::testing::ReferenceSolve;

// Optimal product from the unpruned enumerator for small m, else the oracle.
BigInt Optimum(const Instance& inst) {
  if (inst.num_workers() <= 6) return ReferenceSolve(inst).product;
  return SolveBruteForce(inst)->value.product();
}

void ExpectValid(const Instance& inst, const Solution& s) {
  ASSERT_TRUE(Validate(inst, s.matching).ok());
  ASSERT_EQ(ComputeNashValue(inst, s.matching), s.value);
}

TEST(CapacityOneTest, Examples) {
  EXPECT_EQ(SolveCapacityOne(CrossedPairInstance())->value.product(), 16);
  const Instance single = *Instance::Create({1}, {{2}}, {{3}});
  EXPECT_EQ(SolveCapacityOne(single)->value.product(), 6);
  const Instance more_firms = *Instance::Create({1, 1}, {{1, 1}}, {{1}, {1}});
  EXPECT_TRUE(SolveCapacityOne(more_firms)->value.is_zero());
  const Instance cap2 = *Instance::Create({2}, {{1}}, {{1}});
  EXPECT_EQ(SolveCapacityOne(cap2).status().code(), absl::StatusCode::kFailedPrecondition);
}

TEST(CapacityOneTest, AgreesWithEnumeration) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 80; ++trial) {
    const int m = 1 + trial % 7;
    const Instance inst = RandomInstance(
        rng, {.min_m = m, .max_m = m, .min_n = m, .max_n = m, .min_cap = 1, .max_cap = 1,
              .density_pct = 70});
    absl::StatusOr<Solution> s = SolveCapacityOne(inst);
    ASSERT_TRUE(s.ok());
    ExpectValid(inst, *s);
    ASSERT_EQ(s->value.product(), Optimum(inst)) << trial;
  }
}

TEST(DPTest, Examples) {
  EXPECT_EQ(SolveDP(CrossedPairInstance())->value.product(), 16);
  // A single firm taking everybody: firm utility m, workers 1 each.
  const Instance one = *Instance::Create({5}, ValueMatrix(5, {1}), {{1, 1, 1, 1, 1}});
  EXPECT_EQ(SolveDP(one)->value.product(), 5);
  EXPECT_EQ(SolveDPBoundedCapacity(one, {.max_dp2_capacity = 5})->value.product(), 5);
}

TEST(DPTest, Budget) {
  const Instance inst = *Instance::Create({1}, ValueMatrix(5, {1}), {{1, 1, 1, 1, 1}});
  EXPECT_EQ(SolveDP(inst, {.max_dp_workers = 4}).status().code(),
            absl::StatusCode::kResourceExhausted);
  EXPECT_EQ(SolveDPBoundedCapacity(
                *Instance::Create({5}, ValueMatrix(5, {1}), {{1, 1, 1, 1, 1}}))
                .status()
                .code(),
            absl::StatusCode::kFailedPrecondition);
}

TEST(DPPropertyTest, AgreesWithEnumeration) {
  std::mt19937_64 rng(8);
  int nonzero = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const Instance inst =
        RandomInstance(rng, {.density_pct = trial % 3 == 0 ? 55 : 85});
    absl::StatusOr<Solution> dp = SolveDP(inst);
    ASSERT_TRUE(dp.ok());
    ExpectValid(inst, *dp);
    const BigInt want = Optimum(inst);
    ASSERT_EQ(dp->value.product(), want) << trial;
    nonzero += want > 0;
    absl::StatusOr<Solution> dp2 = SolveDPBoundedCapacity(inst);
    ASSERT_TRUE(dp2.ok());
    ASSERT_EQ(dp2->matching, dp->matching);
  }
  EXPECT_GT(nonzero, 40);
  EXPECT_LT(nonzero, 180);
}

TEST(DPPropertyTest, RecurrenceIsATrueMaximum) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 40; ++trial) {
    const Instance inst = RandomInstance(rng, {.min_n = 2});
    absl::StatusOr<DPTable> t = BuildDPTable(inst);
    ASSERT_TRUE(t.ok());
    const uint32_t full = 1u << inst.num_workers();
    for (int i = 1; i < inst.num_firms(); ++i) {
      for (int sample = 0; sample < 200; ++sample) {
        const uint32_t s = static_cast<uint32_t>(rng() % full);
        const uint32_t sub = static_cast<uint32_t>(rng() % full) & s;
        if (std::popcount(sub) > inst.capacity(i)) continue;
        ASSERT_GE(t->value[i][s], FirmBundleValue(inst, i, sub) * t->value[i - 1][s ^ sub]);
      }
    }
  }
}

TEST(DPPropertyTest, BoundedCapacityMatchesCapacityOne) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    const int m = 1 + trial % 6;
    const Instance inst = RandomInstance(
        rng, {.min_m = m, .max_m = m, .min_n = m, .max_n = m, .min_cap = 1, .max_cap = 1});
    ASSERT_EQ(SolveDPBoundedCapacity(inst)->value, SolveCapacityOne(inst)->value);
  }
}

TEST(ExactBucketingTest, SingleValueLevel) {
  // Every valuation is 3: only class sizes matter.
  const Instance inst = *Instance::Create({2, 3}, ValueMatrix(5, {3, 3}),
                                          ValueMatrix(2, std::vector<Value>(5, 3)));
  absl::StatusOr<Solution> s = SolveExactBucketing(inst);
  ASSERT_TRUE(s.ok());
  EXPECT_EQ(s->value.product(), Optimum(inst));
}

TEST(ExactBucketingTest, SingleFirmMatchesDP) {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 30; ++trial) {
    const Instance inst = RandomInstance(rng, {.max_n = 1, .max_cap = 8});
    ASSERT_EQ(SolveExactBucketing(inst)->value, SolveDP(inst)->value);
  }
}

TEST(ExactBucketingTest, Domain) {
  const Instance many_values = *Instance::Create(
      {3}, {{1}, {2}, {3}, {4}}, {{5, 6, 7, 8}});
  EXPECT_EQ(SolveExactBucketing(many_values).status().code(),
            absl::StatusCode::kFailedPrecondition);
  const Instance ok = *Instance::Create({4}, {{1}, {1}, {1}, {1}}, {{1, 1, 1, 1}});
  EXPECT_EQ(SolveExactBucketing(ok, {.max_guesses = 0}).status().code(),
            absl::StatusCode::kResourceExhausted);
}

TEST(ExactBucketingPropertyTest, AgreesWithEnumeration) {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 150; ++trial) {
    const Instance inst = RandomInstance(
        rng, {.v_max = trial % 2 ? 2 : 4, .density_pct = trial % 3 == 0 ? 60 : 90});
    absl::StatusOr<Solution> s = SolveExactBucketing(inst);
    ASSERT_TRUE(s.ok()) << s.status();
    ExpectValid(inst, *s);
    ASSERT_EQ(s->value.product(), Optimum(inst)) << trial;
  }
}

}  // namespace
}  // namespace nsw
