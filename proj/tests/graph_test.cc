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

#include <cmath>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "nsw/graph/bipartite_matching.h"
#include "nsw/graph/flow.h"
#include "nsw/graph/general_matching.h"
#include "nsw/graph/log_weight.h"
#include "testing/brute_force.h"

namespace nsw {
namespace {

using ::nsw::testing::Uniform;

// Best total weight over all matchings of g (edge-subset enumeration),
// optionally restricted by predicate on the set of covered vertices.
template <typename W>
std::optional<W> BruteBest(const WeightedGraph<W>& g,
                           const std::function<bool(const std::vector<bool>&)>& ok) {
  std::optional<W> best;
  const int ne = static_cast<int>(g.edges.size());
  for (uint32_t mask = 0; mask < (1u << ne); ++mask) {
    std::vector<bool> covered(g.num_vertices, false);
    W total = WeightTraits<W>::Zero();
    bool valid = true;
    for (int k = 0; k < ne && valid; ++k) {
      if (!(mask >> k & 1)) continue;
      const auto& e = g.edges[k];
      if (covered[e.u] || covered[e.v]) valid = false;
      covered[e.u] = covered[e.v] = true;
      total = total + e.weight;
    }
    if (!valid || !ok(covered)) continue;
    if (!best || *best < total) best = total;
  }
  return best;
}

bool AllCovered(const std::vector<bool>& c) {
  for (bool b : c) {
    if (!b) return false;
  }
  return true;
}

template <typename W>
bool IsMatching(const WeightedGraph<W>& g, const std::vector<int>& edges) {
  std::vector<bool> used(g.num_vertices, false);
  for (int k : edges) {
    if (used[g.edges[k].u] || used[g.edges[k].v]) return false;
    used[g.edges[k].u] = used[g.edges[k].v] = true;
  }
  return true;
}

TEST(LogWeightTest, Arithmetic) {
  const LogWeight a = LogWeight::Log(6);
  const LogWeight b = LogWeight::Log(2);
  EXPECT_EQ(a - b, LogWeight::Log(3));
  EXPECT_EQ(a + b, LogWeight::Log(12));
  EXPECT_EQ(LogWeight::Log(9).Half(), LogWeight::Log(3));
  EXPECT_EQ(LogWeight::Log(3).Twice(), LogWeight::Log(9));
  EXPECT_EQ(LogWeight::Log(2).Half().Twice(), LogWeight::Log(2));
  EXPECT_TRUE(LogWeight::Log(1).IsZero());
  EXPECT_LT(-LogWeight::Log(2), LogWeight());
  // sqrt(2) < 3/2 exactly.
  EXPECT_LT(LogWeight::Log(2).Half(), LogWeight::Log(LogWeight::Rational(3, 2)));
  EXPECT_GT(LogWeight::Log(2).Half(), LogWeight::Log(LogWeight::Rational(7, 5)));
  EXPECT_NEAR(LogWeight::Log(10).Half().ToDouble(), std::log(10.0) / 2, 1e-12);
}

TEST(BipartiteTest, CrossedPair) {
  // Left = workers, right = firms; only the crossed pairs are positive.
  WeightedGraph<LogWeight> g{4, {}};
  g.AddEdge(0, 3, LogWeight::Log(2 * 2));
  g.AddEdge(1, 2, LogWeight::Log(2 * 2));
  auto r = MaxWeightBipartiteMatching(g, 2, 2, {.require_left_saturated = true});
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r->edges, (std::vector<int>{0, 1}));
  EXPECT_EQ(r->total_weight, LogWeight::Log(16));
}

TEST(BipartiteTest, SingleEdge) {
  WeightedGraph<double> g{2, {{0, 1, 5.0}}};
  auto r = MaxWeightBipartiteMatching(g, 1, 1);
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r->edges, std::vector<int>{0});
  EXPECT_DOUBLE_EQ(r->total_weight, 5.0);
}

TEST(BipartiteTest, SaturationInfeasible) {
  WeightedGraph<double> g{3, {{0, 2, 1.0}, {1, 2, 1.0}}};
  EXPECT_EQ(MaxWeightBipartiteMatching(g, 2, 1, {.require_left_saturated = true})
                .status()
                .code(),
            absl::StatusCode::kFailedPrecondition);
}

TEST(BipartiteTest, ThreeByThreeAgainstPermutations) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    WeightedGraph<long long> g{6, {}};
    long long w[3][3];
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        w[i][j] = Uniform(rng, 0, 20);
        g.AddEdge(i, 3 + j, w[i][j]);
      }
    }
    std::vector<int> perm = {0, 1, 2};
    long long best = 0;
    do {
      best = std::max(best, w[0][perm[0]] + w[1][perm[1]] + w[2][perm[2]]);
    } while (std::next_permutation(perm.begin(), perm.end()));
    auto r = MaxWeightBipartiteMatching(g, 3, 3, {.require_left_saturated = true});
    ASSERT_TRUE(r.ok());
    EXPECT_EQ(r->total_weight, best);
  }
}

TEST(BipartitePropertyTest, AgreesWithEnumeration) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int l = static_cast<int>(Uniform(rng, 1, 4));
    const int r = static_cast<int>(Uniform(rng, 1, 8 - l));
    WeightedGraph<long long> g{l + r, {}};
    for (int i = 0; i < l; ++i) {
      for (int j = 0; j < r; ++j) {
        if (Uniform(rng, 0, 2) > 0) g.AddEdge(i, l + j, Uniform(rng, -5, 15));
      }
    }
    if (g.edges.size() > 16) g.edges.resize(16);
    const bool saturate = trial % 2 == 0;
    auto got = MaxWeightBipartiteMatching(g, l, r, {.require_left_saturated = saturate});
    const auto want = BruteBest<long long>(g, [&](const std::vector<bool>& c) {
      if (!saturate) return true;
      for (int i = 0; i < l; ++i) {
        if (!c[i]) return false;
      }
      return true;
    });
    ASSERT_EQ(got.ok(), want.has_value()) << trial;
    if (!want) continue;
    ASSERT_TRUE(IsMatching(g, got->edges));
    ASSERT_EQ(got->total_weight, *want) << trial;
  }
}

TEST(BipartiteTest, RightCapacities) {
  // Two left vertices share one right vertex of capacity 2.
  WeightedGraph<long long> g{3, {{0, 2, 3}, {1, 2, 4}}};
  auto r = MaxWeightBipartiteMatching(g, 2, 1, {.right_capacity = {2}});
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r->total_weight, 7);
}

TEST(GeneralMatchingTest, FourCycle) {
  WeightedGraph<long long> g{4, {{0, 1, 1}, {1, 2, 2}, {2, 3, 1}, {3, 0, 2}}};
  auto r = MaxWeightPerfectMatching(g);
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r->total_weight, 4);
  EXPECT_EQ(r->edges, (std::vector<int>{1, 3}));
}

TEST(GeneralMatchingTest, TriangleInfeasible) {
  WeightedGraph<double> g{3, {{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 1.0}}};
  EXPECT_EQ(MaxWeightPerfectMatching(g).status().code(),
            absl::StatusCode::kFailedPrecondition);
  // Even count, but a star has no perfect matching.
  WeightedGraph<double> star{4, {{0, 1, 1.0}, {0, 2, 1.0}, {0, 3, 1.0}}};
  EXPECT_FALSE(MaxWeightPerfectMatching(star).ok());
}

TEST(GeneralMatchingTest, K4AgainstThreePerfectMatchings) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 50; ++trial) {
    WeightedGraph<double> g{4, {}};
    double w[4][4];
    for (int i = 0; i < 4; ++i) {
      for (int j = i + 1; j < 4; ++j) {
        w[i][j] = static_cast<double>(Uniform(rng, 0, 1000)) / 7.0;
        g.AddEdge(i, j, w[i][j]);
      }
    }
    const double best = std::max({w[0][1] + w[2][3], w[0][2] + w[1][3], w[0][3] + w[1][2]});
    auto r = MaxWeightPerfectMatching(g);
    ASSERT_TRUE(r.ok());
    EXPECT_NEAR(r->total_weight, best, 1e-9);
  }
}

// Random graphs with at most 8 vertices exercise blossom creation and
// expansion; exact integer weights make the comparison strict.
TEST(GeneralMatchingPropertyTest, AgreesWithEnumeration) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 600; ++trial) {
    const int n = static_cast<int>(Uniform(rng, 2, 8));
    WeightedGraph<long long> g{n, {}};
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (Uniform(rng, 0, 99) < 55 && g.edges.size() < 18) {
          g.AddEdge(i, j, Uniform(rng, trial % 3 == 0 ? -3 : 1, 12));
        }
      }
    }
    const auto free_best = BruteBest<long long>(g, [](const auto&) { return true; });
    const GeneralMatchingResult<long long> got = MaxWeightMatching(g);
    ASSERT_TRUE(IsMatching(g, got.edges));
    ASSERT_EQ(got.total_weight, *free_best) << trial;

    const auto perfect_best = BruteBest<long long>(g, AllCovered);
    auto perfect = MaxWeightPerfectMatching(g);
    ASSERT_EQ(perfect.ok(), perfect_best.has_value()) << trial;
    if (perfect_best) ASSERT_EQ(perfect->total_weight, *perfect_best) << trial;
  }
}

TEST(GeneralMatchingPropertyTest, EqualWeightsGiveMaximumCardinality) {
  std::mt19937_64 rng(123);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = static_cast<int>(Uniform(rng, 2, 8));
    WeightedGraph<long long> g{n, {}};
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (Uniform(rng, 0, 99) < 40) g.AddEdge(i, j, 1);
      }
    }
    const auto best = BruteBest<long long>(g, [](const auto&) { return true; });
    const auto got = MaxWeightMatching(g, /*max_cardinality=*/true);
    ASSERT_EQ(static_cast<long long>(got.edges.size()), *best) << trial;
  }
}

TEST(GeneralMatchingPropertyTest, ExactLogWeights) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 2 * static_cast<int>(Uniform(rng, 1, 4));
    WeightedGraph<LogWeight> g{n, {}};
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (Uniform(rng, 0, 99) < 60 && g.edges.size() < 16) {
          g.AddEdge(i, j, LogWeight::Log(Uniform(rng, 1, 30)));
        }
      }
    }
    const auto want = BruteBest<LogWeight>(g, AllCovered);
    auto got = MaxWeightPerfectMatching(g);
    ASSERT_EQ(got.ok(), want.has_value()) << trial;
    if (want) ASSERT_EQ(got->total_weight, *want) << trial;
  }
}

TEST(FlowTest, SingleArc) {
  LowerBoundNetwork net(2);
  ASSERT_TRUE(net.AddArc(0, 1, 1, 1).ok());
  ASSERT_TRUE(net.AddArc(1, 0, 0, kInfiniteCapacity).ok());
  auto flow = FindFeasibleCirculation(net);
  ASSERT_TRUE(flow.has_value());
  EXPECT_EQ((*flow)[0], 1);
}

TEST(FlowTest, RejectsEmptyBounds) {
  LowerBoundNetwork net(2);
  EXPECT_EQ(net.AddArc(0, 1, 2, 1).status().code(), absl::StatusCode::kInvalidArgument);
  EXPECT_FALSE(net.AddArc(0, 5, 0, 1).ok());
}

TEST(FlowTest, MaxFlowBasics) {
  MaxFlow mf(4);
  mf.AddArc(0, 1, 3);
  mf.AddArc(0, 2, 2);
  mf.AddArc(1, 3, 2);
  mf.AddArc(2, 3, 3);
  mf.AddArc(1, 2, 1);
  EXPECT_EQ(mf.Solve(0, 3), 5);
}

// Exhaustive search over integral flows bounded by each arc's interval.
TEST(FlowPropertyTest, AgreesWithExhaustiveSearch) {
  std::mt19937_64 rng(31);
  int feasible = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int n = static_cast<int>(Uniform(rng, 2, 4));
    const int arcs = static_cast<int>(Uniform(rng, 1, 6));
    LowerBoundNetwork net(n);
    for (int a = 0; a < arcs; ++a) {
      int u = static_cast<int>(Uniform(rng, 0, n - 1));
      int v = static_cast<int>(Uniform(rng, 0, n - 2));
      if (v >= u) ++v;
      const FlowQuantity lo = Uniform(rng, 0, 1);
      ASSERT_TRUE(net.AddArc(u, v, lo, lo + Uniform(rng, 0, 2)).ok());
    }
    bool exists = false;
    std::vector<FlowQuantity> f(arcs);
    std::function<void(int)> search = [&](int a) {
      if (exists) return;
      if (a == arcs) {
        std::vector<FlowQuantity> bal(n, 0);
        for (int i = 0; i < arcs; ++i) {
          bal[net.arcs()[i].from] -= f[i];
          bal[net.arcs()[i].to] += f[i];
        }
        exists = std::all_of(bal.begin(), bal.end(), [](FlowQuantity b) { return b == 0; });
        return;
      }
      for (f[a] = net.arcs()[a].lower; f[a] <= net.arcs()[a].upper; ++f[a]) search(a + 1);
    };
    search(0);
    auto got = FindFeasibleCirculation(net);
    ASSERT_EQ(got.has_value(), exists) << trial;
    if (!got) continue;
    ++feasible;
    std::vector<FlowQuantity> bal(n, 0);
    for (int i = 0; i < arcs; ++i) {
      ASSERT_GE((*got)[i], net.arcs()[i].lower);
      ASSERT_LE((*got)[i], net.arcs()[i].upper);
      bal[net.arcs()[i].from] -= (*got)[i];
      bal[net.arcs()[i].to] += (*got)[i];
    }
    for (FlowQuantity b : bal) ASSERT_EQ(b, 0);
  }
  EXPECT_GT(feasible, 30);
}

}  // namespace
}  // namespace nsw
