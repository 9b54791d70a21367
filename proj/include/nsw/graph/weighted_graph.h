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

// Edge-list graphs and the weight interface shared by the matching solvers.
//
// The solvers are templates over the weight type. `double` weights are
// compared with an absolute tolerance; LogWeight (log_weight.h) is exact.

#ifndef NSW_GRAPH_WEIGHTED_GRAPH_H_
#define NSW_GRAPH_WEIGHTED_GRAPH_H_

#include <cmath>
#include <utility>
#include <vector>

namespace nsw {

template <typename W>
struct WeightedEdge {
  int u = 0;
  int v = 0;
  W weight{};
};

template <typename W>
struct WeightedGraph {
  int num_vertices = 0;
  std::vector<WeightedEdge<W>> edges;

  void AddEdge(int u, int v, W weight) {
    edges.push_back({u, v, std::move(weight)});
  }
};

// Specialized per weight type. Required members:
//   static W Zero();
//   static W Half(const W&);        // Exact or best-effort x / 2.
//   static W Twice(const W&);
//   static bool IsNonPositive(const W&);
//   static bool IsZero(const W&);
//   static double ToDouble(const W&);
template <typename W>
struct WeightTraits;

inline constexpr double kWeightTolerance = 1e-9;

template <>
struct WeightTraits<double> {
  static double Zero() { return 0.0; }
  static double Half(double x) { return x / 2; }
  static double Twice(double x) { return 2 * x; }
  static bool IsNonPositive(double x) { return x <= kWeightTolerance; }
  static bool IsZero(double x) { return std::abs(x) <= kWeightTolerance; }
  static double ToDouble(double x) { return x; }
};

template <>
struct WeightTraits<long long> {
  static long long Zero() { return 0; }
  static long long Half(long long x) { return x / 2; }
  static long long Twice(long long x) { return 2 * x; }
  static bool IsNonPositive(long long x) { return x <= 0; }
  static bool IsZero(long long x) { return x == 0; }
  static double ToDouble(long long x) { return static_cast<double>(x); }
};

}  // namespace nsw

#endif  // NSW_GRAPH_WEIGHTED_GRAPH_H_
