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

// Instance generators: random families (deterministic per seed) and the
// hardness constructions from PARTITION and RAINBOW PERFECT MATCHING, which
// come with an exact welfare threshold and, when planted, a certificate.

#ifndef NSW_GENERATORS_H_
#define NSW_GENERATORS_H_

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "json.hpp"
#include "nsw/instance.h"
#include "nsw/welfare.h"

namespace nsw {

// theta = base^(num / den) with a nonnegative rational base. A matching on N
// agents reaches theta iff its Nash product is at least base^(N num / den).
struct Theta {
  BigInt base_num = 0;
  BigInt base_den = 1;
  int64_t num = 0;
  int64_t den = 1;

  std::string BaseString() const;
};

struct GeneratedInstance {
  Instance instance;
  std::string kind;
  std::optional<Theta> theta;
  uint64_t seed = 0;
  // A planted optimal matching (per-worker firm), when the construction has
  // one.
  std::optional<Matching> certificate;
};

// base^(N num / den) for N agents, when that is an integer.
std::optional<BigInt> ThresholdProduct(const Theta& theta, int num_agents);

nlohmann::ordered_json GeneratedInstanceToJson(const GeneratedInstance& g);

// Uniform random family. Entries are drawn from [1, v_max] and each is then
// zeroed independently with probability 1 - density.
struct RandomParams {
  int m = 6;
  int n = 3;
  // Size n, or a single entry applied to every firm.
  std::vector<int> capacities = {2};
  Value v_max = 5;
  double density = 1.0;
  uint64_t seed = 0;
};

absl::StatusOr<GeneratedInstance> GenRandom(const RandomParams& params);

// Two identical firms of capacity m / 2; worker i and both firms value each
// other at a_i. The optimum reaches T^2 * prod(a) (T = sum / 2) iff a
// balanced equal-sum split exists. `strict` gives every agent strict
// preferences: workers value f2 at 2 a_i and f2 values w_i at a_i / 2^(m/2);
// all entries are then multiplied by 2^(m/2) to stay integral.
absl::StatusOr<GeneratedInstance> GenFromPartition(const std::vector<Value>& a,
                                                   bool strict);

// Exhaustive check for a split into two halves of equal size and sum.
bool HasBalancedPartition(const std::vector<Value>& a);

// Bipartite multigraph on X = {0..r-1}, Y = {0..r-1} with colored edges.
struct RainbowEdge {
  int x;
  int y;
  int color;
};

struct RainbowGraph {
  int r = 0;
  std::vector<RainbowEdge> edges;
  // Edge indices of a planted rainbow perfect matching, if any.
  std::vector<int> certificate;
};

// Every vertex has degree 3, every color has 3 edges, and no color repeats
// on a vertex pair.
absl::Status CheckRestrictedRainbow(const RainbowGraph& g);

// Exhaustive search; returns edge indices ordered by x.
std::optional<std::vector<int>> FindRainbowPerfectMatching(const RainbowGraph& g);

// 3-D matching instance over X, Y, Z = {0..r-1}.
struct Tripartite {
  int r = 0;
  std::vector<std::array<int, 3>> triples;
  // Triple indices of a planted perfect 3-D matching, if any.
  std::vector<int> certificate;
};

// Color class i collects the pairs (x, y) of the triples containing z_i.
absl::StatusOr<RainbowGraph> GenRainbowFrom3DM(const Tripartite& t);

// 3-regular tripartite instances. The planted variant is a union of three
// perfect 3-D matchings, the first one recorded as certificate; the other
// pairs copies of vertices at random and may have no perfect 3-D matching.
Tripartite RandomPlanted3DM(int r, std::mt19937_64& rng);
Tripartite RandomRegular3DM(int r, std::mt19937_64& rng);

// 3r main firms (one per edge, grouped by color), r dummy firms, 2r main
// workers (X then Y) and 3r dummy workers; every capacity is 2. theta is
// 2^(4/9): the optimum reaches 2^(4r) iff g has a rainbow perfect matching.
absl::StatusOr<GeneratedInstance> GenFromRainbow(const RainbowGraph& g);

// Random members of the restricted domains, for tests and benchmarks.
Instance RandomSymmetricBinary(int m, int n, int max_cap, int density_pct,
                               std::mt19937_64& rng);
// Disjoint paths and cycles over m workers and n firms.
Instance RandomDegreeTwo(int m, int n, Value v_max, std::mt19937_64& rng);
// n firms of degree <= 3 and 2n workers; mostly planted yes-instances, with
// some firm pairs sharing two workers.
Instance RandomDegree3Capacity2(int n, Value v_max, std::mt19937_64& rng);
Instance RandomSinglePositiveFirm(int m, int n, int max_cap, Value v_max,
                                  std::mt19937_64& rng);
Instance RandomUnitCapacity(int m, int n, Value v_max, int density_pct,
                            std::mt19937_64& rng);

// Uniform integer in [lo, hi] (modulo reduction; deterministic across
// standard libraries).
int64_t UniformInt(std::mt19937_64& rng, int64_t lo, int64_t hi);

}  // namespace nsw

#endif  // NSW_GENERATORS_H_
