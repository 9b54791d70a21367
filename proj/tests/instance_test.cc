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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "nsw/instance.h"
#include "nsw/json_io.h"
#include "nsw/welfare.h"
#include "testing/brute_force.h"

namespace nsw {
namespace {

using ::nsw::testing::CrossedPairInstance;
using ::nsw::testing::RandomInstance;
using ::nsw::testing::RandomSpec;
using ::nsw::testing::ReferenceProduct;
using ::nsw::testing::Uniform;

const Matching kCrossed{{1, 0}};
const Matching kAligned{{0, 1}};

// Random capacity-feasible assignment, unmatched workers allowed.
Matching RandomMatching(std::mt19937_64& rng, const Instance& inst) {
  Matching mu = Matching::Empty(inst.num_workers());
  std::vector<int> load(inst.num_firms(), 0);
  for (int w = 0; w < inst.num_workers(); ++w) {
    const int f = static_cast<int>(Uniform(rng, -1, inst.num_firms() - 1));
    if (f >= 0 && load[f] < inst.capacity(f)) {
      mu.assignment[w] = f;
      ++load[f];
    }
  }
  return mu;
}

TEST(InstanceTest, RejectsMalformedInput) {
  EXPECT_FALSE(Instance::Create({}, {}, {}).ok());
  EXPECT_FALSE(Instance::Create({1}, {}, {{}}).ok());
  EXPECT_FALSE(Instance::Create({1}, {{1, 2}}, {{1}}).ok());
  EXPECT_FALSE(Instance::Create({1}, {{1}}, {{-1}}).ok());
  EXPECT_FALSE(Instance::Create({-1}, {{1}}, {{1}}).ok());
  EXPECT_FALSE(Instance::Create({1, 1}, {{1, 1}}, {{1}}).ok());
}

TEST(InstanceTest, CachesMaxValue) {
  const Instance inst = CrossedPairInstance();
  EXPECT_EQ(inst.max_value(), 3);
  EXPECT_EQ(inst.num_distinct_values(), 3);
  EXPECT_FALSE(inst.all_positive());
  EXPECT_EQ(inst.total_capacity(), 2);
}

TEST(UtilityTest, Workers) {
  const Instance inst = CrossedPairInstance();
  EXPECT_EQ(UtilityOfWorker(inst, kCrossed, 0), 2);
  EXPECT_EQ(UtilityOfWorker(inst, kAligned, 0), 0);
  EXPECT_EQ(UtilityOfWorker(inst, Matching::Empty(2), 0), 0);
  EXPECT_THROW(UtilityOfWorker(inst, kCrossed, 2), std::out_of_range);
}

TEST(UtilityTest, Firms) {
  const Instance inst = CrossedPairInstance();
  EXPECT_EQ(UtilityOfFirm(inst, kCrossed, 0), 2);
  EXPECT_EQ(UtilityOfFirm(inst, Matching::Empty(2), 0), 0);
  EXPECT_THROW(UtilityOfFirm(inst, kCrossed, 5), std::out_of_range);
  const Instance pair = *Instance::Create({2}, {{1}, {1}}, {{3, 5}});
  EXPECT_EQ(UtilityOfFirm(pair, Matching{{0, 0}}, 0), 8);
}

TEST(NashValueTest, CrossedMatching) {
  const Instance inst = CrossedPairInstance();
  const NashValue v = ComputeNashValue(inst, kCrossed);
  EXPECT_EQ(v.product(), 16);
  EXPECT_FALSE(v.is_zero());
  EXPECT_NEAR(v.welfare(), 2.0, 1e-12);
  EXPECT_TRUE(ComputeNashValue(inst, kAligned).is_zero());
  EXPECT_TRUE(ComputeNashValue(inst, Matching{{1, kUnmatched}}).is_zero());
}

TEST(NashValueTest, SingleAgentPair) {
  const Instance inst = *Instance::Create({1}, {{1}}, {{1}});
  const NashValue v = ComputeNashValue(inst, Matching{{0}});
  EXPECT_EQ(v.product(), 1);
  EXPECT_DOUBLE_EQ(v.welfare(), 1.0);
}

TEST(NashValueTest, OrderingIsByExactProduct) {
  const NashValue zero;
  const NashValue one = NashValue::FromProduct(1, 2);
  const NashValue big = NashValue::FromProduct(BigInt(1) << 200, 2);
  EXPECT_LT(zero, one);
  EXPECT_LT(one, big);
  EXPECT_EQ(big, NashValue::FromProduct(BigInt(1) << 200, 7));
  EXPECT_NEAR(big.log_welfare(), 100 * std::log(2.0), 1e-9);
}

TEST(WelfareTest, Utilitarian) {
  const Instance inst = CrossedPairInstance();
  EXPECT_EQ(UtilitarianWelfare(inst, kCrossed), 8);
  EXPECT_EQ(UtilitarianWelfare(inst, Matching::Empty(2)), 0);
}

TEST(WelfareTest, FirmBundleValue) {
  const Instance inst = *Instance::Create({2}, {{2}, {2}}, {{1, 2}});
  EXPECT_EQ(FirmBundleValue(inst, 0, 0), 0);
  EXPECT_EQ(FirmBundleValue(inst, 0, 0b11), 12);
  const Instance single = *Instance::Create({1}, {{2}}, {{3}});
  EXPECT_EQ(FirmBundleValue(single, 0, 0b1), 6);
}

TEST(ValidateTest, Cases) {
  const Instance inst = CrossedPairInstance();
  EXPECT_TRUE(Validate(inst, kCrossed).ok());
  EXPECT_TRUE(Validate(inst, Matching::Empty(2)).ok());
  EXPECT_EQ(Validate(inst, Matching{{0, 0}}).code(),
            absl::StatusCode::kFailedPrecondition);
  EXPECT_EQ(Validate(inst, Matching{{2, 0}}).code(), absl::StatusCode::kOutOfRange);
  EXPECT_EQ(Validate(inst, Matching{{0}}).code(), absl::StatusCode::kInvalidArgument);
}

TEST(DegreeProfileTest, Cases) {
  const DegreeProfile p = ComputeDegreeProfile(CrossedPairInstance());
  // One-sided edges survive.
  EXPECT_EQ(p.worker_degrees, (std::vector<int>{2, 2}));
  EXPECT_EQ(p.max_degree, 2);
  const Instance zeros = *Instance::Create({1, 1}, {{0, 0}}, {{0}, {0}});
  const DegreeProfile z = ComputeDegreeProfile(zeros);
  EXPECT_EQ(z.max_degree, 0);
  EXPECT_EQ(z.firm_degrees, (std::vector<int>{0, 0}));
}

TEST(BinarizeTest, Cases) {
  const Instance inst = CrossedPairInstance();
  const Instance b = Binarize(inst);
  EXPECT_EQ(b.worker_vals(), (ValueMatrix{{0, 1}, {1, 0}}));
  EXPECT_EQ(b.firm_vals(), (ValueMatrix{{1, 1}, {1, 1}}));
  EXPECT_EQ(Binarize(b), b);
  const Instance ternary = *Instance::Create({1}, {{0}, {2}}, {{1, 2}});
  EXPECT_EQ(Binarize(ternary).worker_vals(), (ValueMatrix{{0}, {1}}));
}

TEST(JsonTest, RoundTrip) {
  const Instance inst = CrossedPairInstance();
  const auto j = InstanceToJson(inst);
  EXPECT_EQ(j.dump(), R"({"m":2,"n":2,"capacities":[1,1],)"
                      R"("worker_vals":[[0,2],[2,0]],"firm_vals":[[3,2],[2,3]]})");
  absl::StatusOr<Instance> back = InstanceFromJson(nlohmann::json::parse(j.dump()));
  ASSERT_TRUE(back.ok()) << back.status();
  EXPECT_EQ(*back, inst);

  const Matching mu{{1, kUnmatched}};
  EXPECT_EQ(MatchingToJson(mu).dump(), R"({"assignment":[1,null]})");
  absl::StatusOr<Matching> mback =
      MatchingFromJson(nlohmann::json::parse(MatchingToJson(mu).dump()));
  ASSERT_TRUE(mback.ok());
  EXPECT_EQ(*mback, mu);
}

TEST(JsonTest, RejectsBadInput) {
  EXPECT_FALSE(ParseJson("{").ok());
  EXPECT_FALSE(InstanceFromJson(nlohmann::json::parse(R"({"capacities":[1]})")).ok());
  EXPECT_FALSE(InstanceFromJson(nlohmann::json::parse(
                   R"({"m":3,"capacities":[1],"worker_vals":[[1]],"firm_vals":[[1]]})"))
                   .ok());
  EXPECT_FALSE(MatchingFromJson(nlohmann::json::parse(R"({"assignment":["a"]})")).ok());
}

// Randomized invariants over small instances and random matchings.
class InstancePropertyTest : public ::testing::Test {
 protected:
  std::mt19937_64 rng_{20260101};
};

TEST_F(InstancePropertyTest, ProductMatchesIndependentRecomputation) {
  for (int trial = 0; trial < 500; ++trial) {
    const Instance inst = RandomInstance(rng_, RandomSpec{});
    const Matching mu = RandomMatching(rng_, inst);
    ASSERT_TRUE(Validate(inst, mu).ok());
    const NashValue v = ComputeNashValue(inst, mu);
    ASSERT_EQ(v.product(), ReferenceProduct(inst, mu.assignment));
    ASSERT_EQ(v.is_zero(), v.product() == 0);
    if (v.is_zero()) continue;
    // Positive product: everybody matched with positive utility.
    for (int w = 0; w < inst.num_workers(); ++w) {
      ASSERT_TRUE(mu.is_matched(w));
      ASSERT_GE(UtilityOfWorker(inst, mu, w), 1);
    }
    const double rel = std::exp(inst.num_agents() * v.log_welfare()) /
                       v.product().convert_to<double>();
    ASSERT_NEAR(rel, 1.0, 1e-9);
    // AM-GM.
    const double mean =
        static_cast<double>(UtilitarianWelfare(inst, mu)) / inst.num_agents();
    ASSERT_GE(mean + 1e-9, v.welfare());
  }
}

TEST_F(InstancePropertyTest, WorkerRelabelingPreservesProduct) {
  for (int trial = 0; trial < 300; ++trial) {
    const Instance inst = RandomInstance(rng_, RandomSpec{});
    const Matching mu = RandomMatching(rng_, inst);
    const int m = inst.num_workers();
    const int n = inst.num_firms();
    std::vector<int> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng_);
    // Worker w becomes perm[w].
    ValueMatrix wv(m), fv(n, std::vector<Value>(m));
    Matching relabeled = Matching::Empty(m);
    for (int w = 0; w < m; ++w) {
      wv[perm[w]] = inst.worker_vals()[w];
      for (int f = 0; f < n; ++f) fv[f][perm[w]] = inst.firm_value(f, w);
      relabeled.assignment[perm[w]] = mu.assignment[w];
    }
    const Instance other = *Instance::Create(inst.capacities(), wv, fv);
    ASSERT_EQ(ComputeNashValue(other, relabeled), ComputeNashValue(inst, mu));
  }
}

TEST_F(InstancePropertyTest, BinarizePreservesZeroStatus) {
  for (int trial = 0; trial < 300; ++trial) {
    const Instance inst = RandomInstance(rng_, RandomSpec{.density_pct = 60});
    const Instance b = Binarize(inst);
    const Matching mu = RandomMatching(rng_, inst);
    ASSERT_EQ(ComputeNashValue(inst, mu).is_zero(),
              ComputeNashValue(b, mu).is_zero());
    ASSERT_EQ(Binarize(b), b);
  }
}

TEST_F(InstancePropertyTest, DegreesCountEitherSidePositive) {
  for (int trial = 0; trial < 100; ++trial) {
    const Instance inst = RandomInstance(rng_, RandomSpec{.density_pct = 50});
    const DegreeProfile p = ComputeDegreeProfile(inst);
    int total = 0;
    for (int w = 0; w < inst.num_workers(); ++w) {
      int d = 0;
      for (int f = 0; f < inst.num_firms(); ++f) {
        d += inst.worker_value(w, f) > 0 || inst.firm_value(f, w) > 0;
      }
      ASSERT_EQ(p.worker_degrees[w], d);
      total += d;
    }
    ASSERT_EQ(std::accumulate(p.firm_degrees.begin(), p.firm_degrees.end(), 0),
              total);
  }
}

}  // namespace
}  // namespace nsw
