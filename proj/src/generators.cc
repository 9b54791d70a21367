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

#include "nsw/generators.h"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>
#include <utility>

#include "absl/strings/str_cat.h"
#include "nsw/json_io.h"

namespace nsw {
namespace {

// Fisher-Yates with our own integer draws: std::shuffle is not specified
// bit-for-bit across standard libraries.
template <typename T>
void Shuffle(std::vector<T>& v, std::mt19937_64& rng) {
  for (int i = static_cast<int>(v.size()) - 1; i > 0; --i) {
    std::swap(v[i], v[UniformInt(rng, 0, i)]);
  }
}

std::vector<int> Permutation(int k, std::mt19937_64& rng) {
  std::vector<int> p(k);
  std::iota(p.begin(), p.end(), 0);
  Shuffle(p, rng);
  return p;
}

bool Chance(std::mt19937_64& rng, int pct) { return UniformInt(rng, 0, 99) < pct; }

BigInt Pow(const BigInt& b, int64_t e) {
  BigInt out = 1;
  for (int64_t i = 0; i < e; ++i) out *= b;
  return out;
}

}  // namespace

int64_t UniformInt(std::mt19937_64& rng, int64_t lo, int64_t hi) {
  return lo + static_cast<int64_t>(rng() % static_cast<uint64_t>(hi - lo + 1));
}

std::string Theta::BaseString() const {
  if (base_den == 1) return base_num.str();
  return absl::StrCat(base_num.str(), "/", base_den.str());
}

std::optional<BigInt> ThresholdProduct(const Theta& theta, int num_agents) {
  const int64_t e = theta.num * num_agents;
  if (e % theta.den != 0) return std::nullopt;
  const BigInt num = Pow(theta.base_num, e / theta.den);
  const BigInt den = Pow(theta.base_den, e / theta.den);
  if (num % den != 0) return std::nullopt;
  return BigInt(num / den);
}

nlohmann::ordered_json GeneratedInstanceToJson(const GeneratedInstance& g) {
  nlohmann::ordered_json j = InstanceToJson(g.instance);
  nlohmann::ordered_json meta;
  meta["kind"] = g.kind;
  if (g.theta.has_value()) {
    meta["theta"] = {{"base", g.theta->BaseString()},
                     {"num", g.theta->num},
                     {"den", g.theta->den}};
  } else {
    meta["theta"] = nullptr;
  }
  meta["seed"] = g.seed;
  meta["certificate"] =
      g.certificate.has_value() ? MatchingToJson(*g.certificate) : nlohmann::ordered_json();
  j["meta"] = std::move(meta);
  return j;
}

absl::StatusOr<GeneratedInstance> GenRandom(const RandomParams& p) {
  if (p.m < 1 || p.n < 1) return absl::InvalidArgumentError("need m >= 1 and n >= 1");
  if (p.v_max < 0) return absl::InvalidArgumentError("v_max must be nonnegative");
  if (!(p.density >= 0.0 && p.density <= 1.0)) {
    return absl::InvalidArgumentError("density must lie in [0, 1]");
  }
  std::vector<int> caps = p.capacities;
  if (caps.size() == 1) caps.assign(p.n, caps[0]);
  if (static_cast<int>(caps.size()) != p.n) {
    return absl::InvalidArgumentError(
        absl::StrCat("expected 1 or ", p.n, " capacities, got ", caps.size()));
  }
  std::mt19937_64 rng(p.seed);
  const auto keep_below = static_cast<uint64_t>(p.density * 1000000.0 + 0.5);
  auto draw = [&]() -> Value {
    const Value v = p.v_max == 0 ? 0 : UniformInt(rng, 1, p.v_max);
    return rng() % 1000000 < keep_below ? v : 0;
  };
  ValueMatrix wv(p.m, std::vector<Value>(p.n));
  ValueMatrix fv(p.n, std::vector<Value>(p.m));
  for (auto& row : wv) {
    for (Value& v : row) v = draw();
  }
  for (auto& row : fv) {
    for (Value& v : row) v = draw();
  }
  absl::StatusOr<Instance> inst = Instance::Create(std::move(caps), std::move(wv), std::move(fv));
  if (!inst.ok()) return inst.status();
  return GeneratedInstance{*std::move(inst), "random", std::nullopt, p.seed, std::nullopt};
}

bool HasBalancedPartition(const std::vector<Value>& a) {
  const int m = static_cast<int>(a.size());
  if (m % 2 != 0) return false;
  const Value total = std::accumulate(a.begin(), a.end(), Value{0});
  if (total % 2 != 0) return false;
  for (uint64_t s = 0; s < (uint64_t{1} << m); ++s) {
    if (std::popcount(s) != m / 2) continue;
    Value sum = 0;
    for (int i = 0; i < m; ++i) {
      if (s >> i & 1) sum += a[i];
    }
    if (2 * sum == total) return true;
  }
  return false;
}

absl::StatusOr<GeneratedInstance> GenFromPartition(const std::vector<Value>& a, bool strict) {
  const int m = static_cast<int>(a.size());
  if (m == 0 || m % 2 != 0) {
    return absl::InvalidArgumentError(absl::StrCat("need an even number of integers, got ", m));
  }
  if (m > 40) return absl::InvalidArgumentError("at most 40 integers supported");
  std::set<Value> seen;
  for (Value x : a) {
    if (x <= 0) return absl::InvalidArgumentError("integers must be positive");
    if (!seen.insert(x).second) {
      return absl::InvalidArgumentError(absl::StrCat("repeated element ", x));
    }
  }
  const Value scale = strict ? Value{1} << (m / 2) : 1;
  for (Value x : a) {
    if (x > std::numeric_limits<Value>::max() / (4 * scale)) {
      return absl::InvalidArgumentError("integers too large");
    }
  }
  ValueMatrix wv(m), fv(2, std::vector<Value>(m));
  for (int i = 0; i < m; ++i) {
    wv[i] = strict ? std::vector<Value>{a[i] * scale, 2 * a[i] * scale}
                   : std::vector<Value>{a[i], a[i]};
    fv[0][i] = a[i] * scale;
    fv[1][i] = a[i];
  }
  absl::StatusOr<Instance> inst = Instance::Create({m / 2, m / 2}, std::move(wv), std::move(fv));
  if (!inst.ok()) return inst.status();

  // theta^(m+2) = T^2 prod(a), times scale^(m+2) when every utility is scaled.
  BigInt sum = 0, prod = 1;
  for (Value x : a) sum += x, prod *= x;
  Theta theta;
  theta.base_num = sum * sum * prod * Pow(BigInt(scale), m + 2);
  theta.base_den = 4;
  const BigInt g = boost::multiprecision::gcd(theta.base_num, theta.base_den);
  theta.base_num /= g;
  theta.base_den /= g;
  theta.num = 1;
  theta.den = m + 2;
  return GeneratedInstance{*std::move(inst), strict ? "partition-strict" : "partition", theta,
                           0, std::nullopt};
}

absl::Status CheckRestrictedRainbow(const RainbowGraph& g) {
  if (g.r < 2) return absl::InvalidArgumentError("rainbow graphs need r >= 2");
  std::vector<int> dx(g.r, 0), dy(g.r, 0), colors(g.r, 0);
  std::set<std::array<int, 3>> seen;
  for (const RainbowEdge& e : g.edges) {
    if (e.x < 0 || e.x >= g.r || e.y < 0 || e.y >= g.r || e.color < 0 || e.color >= g.r) {
      return absl::InvalidArgumentError("rainbow edge out of range");
    }
    if (!seen.insert({e.x, e.y, e.color}).second) {
      return absl::InvalidArgumentError(
          absl::StrCat("color ", e.color, " repeated on pair (", e.x, ", ", e.y, ")"));
    }
    ++dx[e.x], ++dy[e.y], ++colors[e.color];
  }
  for (int i = 0; i < g.r; ++i) {
    if (dx[i] != 3 || dy[i] != 3) {
      return absl::InvalidArgumentError(absl::StrCat("vertex ", i, " does not have degree 3"));
    }
    if (colors[i] != 3) {
      return absl::InvalidArgumentError(absl::StrCat("color ", i, " does not have 3 edges"));
    }
  }
  return absl::OkStatus();
}

std::optional<std::vector<int>> FindRainbowPerfectMatching(const RainbowGraph& g) {
  std::vector<std::vector<int>> by_x(g.r);
  for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) by_x[g.edges[e].x].push_back(e);
  std::vector<bool> used_y(g.r, false), used_color(g.r, false);
  std::vector<int> chosen;
  auto dfs = [&](auto&& self, int x) -> bool {
    if (x == g.r) return true;
    for (int e : by_x[x]) {
      const RainbowEdge& edge = g.edges[e];
      if (used_y[edge.y] || used_color[edge.color]) continue;
      used_y[edge.y] = used_color[edge.color] = true;
      chosen.push_back(e);
      if (self(self, x + 1)) return true;
      chosen.pop_back();
      used_y[edge.y] = used_color[edge.color] = false;
    }
    return false;
  };
  if (!dfs(dfs, 0)) return std::nullopt;
  return chosen;
}

absl::StatusOr<RainbowGraph> GenRainbowFrom3DM(const Tripartite& t) {
  if (t.triples.empty()) return absl::InvalidArgumentError("empty triple set");
  if (t.r < 2) return absl::InvalidArgumentError("need r >= 2");
  std::vector<std::array<int, 3>> degree(t.r, {0, 0, 0});
  std::set<std::array<int, 3>> seen;
  for (const auto& tr : t.triples) {
    for (int k = 0; k < 3; ++k) {
      if (tr[k] < 0 || tr[k] >= t.r) return absl::InvalidArgumentError("vertex out of range");
      ++degree[tr[k]][k];
    }
    if (!seen.insert(tr).second) return absl::InvalidArgumentError("repeated triple");
  }
  for (int v = 0; v < t.r; ++v) {
    for (int k = 0; k < 3; ++k) {
      if (degree[v][k] != 3) {
        return absl::InvalidArgumentError(
            absl::StrCat("vertex ", v, " of part ", k, " is not in exactly three triples"));
      }
    }
  }
  RainbowGraph g;
  g.r = t.r;
  for (const auto& tr : t.triples) g.edges.push_back({tr[0], tr[1], tr[2]});
  g.certificate = t.certificate;
  if (absl::Status s = CheckRestrictedRainbow(g); !s.ok()) return s;
  return g;
}

Tripartite RandomPlanted3DM(int r, std::mt19937_64& rng) {
  while (true) {
    Tripartite t;
    t.r = r;
    std::set<std::array<int, 3>> seen;
    bool ok = true;
    for (int k = 0; k < 3 && ok; ++k) {
      const std::vector<int> s = Permutation(r, rng), u = Permutation(r, rng);
      for (int x = 0; x < r; ++x) {
        ok &= seen.insert({x, s[x], u[x]}).second;
        t.triples.push_back({x, s[x], u[x]});
      }
    }
    if (!ok) continue;
    t.certificate.resize(r);
    std::iota(t.certificate.begin(), t.certificate.end(), 0);
    return t;
  }
}

Tripartite RandomRegular3DM(int r, std::mt19937_64& rng) {
  while (true) {
    std::vector<int> ys, zs;
    for (int v = 0; v < r; ++v) ys.insert(ys.end(), 3, v), zs.insert(zs.end(), 3, v);
    Shuffle(ys, rng);
    Shuffle(zs, rng);
    Tripartite t;
    t.r = r;
    std::set<std::array<int, 3>> seen;
    bool ok = true;
    for (int i = 0; i < 3 * r; ++i) {
      t.triples.push_back({i / 3, ys[i], zs[i]});
      ok &= seen.insert(t.triples.back()).second;
    }
    if (ok) return t;
  }
}

absl::StatusOr<GeneratedInstance> GenFromRainbow(const RainbowGraph& g) {
  if (absl::Status s = CheckRestrictedRainbow(g); !s.ok()) return s;
  const int r = g.r;
  const int m = 5 * r, n = 4 * r;
  // Main firm of edge e is 3 * color + (rank of e within its color).
  std::vector<int> firm_of_edge(g.edges.size()), rank(r, 0);
  for (size_t e = 0; e < g.edges.size(); ++e) {
    const int c = g.edges[e].color;
    firm_of_edge[e] = 3 * c + rank[c]++;
  }
  ValueMatrix wv(m, std::vector<Value>(n, 0));
  ValueMatrix fv(n, std::vector<Value>(m, 0));
  auto link = [&](int w, int f, Value worker_side, Value firm_side) {
    wv[w][f] = worker_side;
    fv[f][w] = firm_side;
  };
  for (size_t e = 0; e < g.edges.size(); ++e) {
    const int f = firm_of_edge[e];
    link(g.edges[e].x, f, 1, 1);
    link(r + g.edges[e].y, f, 1, 1);
  }
  for (int c = 0; c < r; ++c) {
    for (int j = 0; j < 3; ++j) {
      const int d = 2 * r + 3 * c + j;
      link(d, 3 * c + j, 1, 2);  // Signature dummy worker.
      link(d, 3 * r + c, 1, 2);  // Dummy firm of the color.
    }
  }
  absl::StatusOr<Instance> inst = Instance::Create(std::vector<int>(n, 2), std::move(wv),
                                                   std::move(fv));
  if (!inst.ok()) return inst.status();
  GeneratedInstance out{*std::move(inst), "rainbow", Theta{2, 1, 4, 9}, 0, std::nullopt};

  if (!g.certificate.empty()) {
    std::vector<bool> ys(r, false), xs(r, false), colors(r, false);
    Matching mu = Matching::Empty(m);
    std::vector<bool> main_used(3 * r, false);
    for (int e : g.certificate) {
      if (e < 0 || e >= static_cast<int>(g.edges.size())) {
        return absl::InvalidArgumentError("certificate edge out of range");
      }
      const RainbowEdge& edge = g.edges[e];
      if (xs[edge.x] || ys[edge.y] || colors[edge.color]) {
        return absl::InvalidArgumentError("certificate is not a rainbow perfect matching");
      }
      xs[edge.x] = ys[edge.y] = colors[edge.color] = true;
      mu.assignment[edge.x] = mu.assignment[r + edge.y] = firm_of_edge[e];
      main_used[firm_of_edge[e]] = true;
    }
    if (static_cast<int>(g.certificate.size()) != r) {
      return absl::InvalidArgumentError("certificate must have r edges");
    }
    for (int f = 0; f < 3 * r; ++f) {
      const int c = f / 3, j = f % 3;
      mu.assignment[2 * r + 3 * c + j] = main_used[f] ? 3 * r + c : f;
    }
    out.certificate = std::move(mu);
  }
  return out;
}

Instance RandomSymmetricBinary(int m, int n, int max_cap, int density_pct,
                               std::mt19937_64& rng) {
  std::vector<int> caps(n);
  for (int& c : caps) c = static_cast<int>(UniformInt(rng, 1, max_cap));
  ValueMatrix wv(m, std::vector<Value>(n, 0));
  ValueMatrix fv(n, std::vector<Value>(m, 0));
  for (int w = 0; w < m; ++w) {
    for (int f = 0; f < n; ++f) wv[w][f] = fv[f][w] = Chance(rng, density_pct) ? 1 : 0;
  }
  return *Instance::Create(std::move(caps), std::move(wv), std::move(fv));
}

Instance RandomDegreeTwo(int m, int n, Value v_max, std::mt19937_64& rng) {
  const std::vector<int> wperm = Permutation(m, rng), fperm = Permutation(n, rng);
  size_t wi = 0, fi = 0;
  ValueMatrix wv(m, std::vector<Value>(n, 0));
  ValueMatrix fv(n, std::vector<Value>(m, 0));
  auto link = [&](int w, int f) {
    const int mode = static_cast<int>(UniformInt(rng, 0, 9));
    wv[w][f] = mode == 0 ? 0 : UniformInt(rng, 1, v_max);
    fv[f][w] = mode == 1 ? 0 : UniformInt(rng, 1, v_max);
  };
  while (wi < wperm.size() || fi < fperm.size()) {
    const size_t wl = wperm.size() - wi, fl = fperm.size() - fi;
    if (wl >= 2 && fl >= 2 && Chance(rng, 30)) {
      const int k = static_cast<int>(UniformInt(rng, 2, static_cast<int64_t>(std::min<size_t>({wl, fl, 4}))));
      for (int i = 0; i < k; ++i) {
        link(wperm[wi + i], fperm[fi + i]);
        link(wperm[wi + i], fperm[fi + (i + 1) % k]);
      }
      wi += k, fi += k;
      continue;
    }
    // Path alternating between the two sides.
    bool worker_turn = fl == 0 || (wl > 0 && Chance(rng, 50));
    const int len = static_cast<int>(UniformInt(rng, 2, 6));
    int last = -1;
    for (int i = 0; i < len; ++i) {
      if (worker_turn ? wi == wperm.size() : fi == fperm.size()) break;
      const int a = worker_turn ? wperm[wi++] : fperm[fi++];
      if (last != -1) worker_turn ? link(a, last) : link(last, a);
      last = a;
      worker_turn = !worker_turn;
    }
  }
  std::vector<int> caps(n);
  for (int& c : caps) c = static_cast<int>(UniformInt(rng, 1, 2));
  return *Instance::Create(std::move(caps), std::move(wv), std::move(fv));
}

Instance RandomDegree3Capacity2(int n, Value v_max, std::mt19937_64& rng) {
  const int m = 2 * n;
  std::vector<std::set<int>> nbrs(n);
  if (Chance(rng, 80)) {
    const std::vector<int> p = Permutation(m, rng);
    for (int f = 0; f < n; ++f) nbrs[f] = {p[2 * f], p[2 * f + 1]};
    // Pairs sharing two workers: N(f) = {a, b, c}, N(g) = {b, c, d}.
    for (int f = 0; f + 1 < n; f += 2) {
      if (!Chance(rng, 35)) continue;
      nbrs[f].insert(p[2 * f + 2]);
      nbrs[f + 1].insert(p[2 * f + 1]);
    }
    for (int f = 0; f < n; ++f) {
      if (nbrs[f].size() == 2 && Chance(rng, 50)) {
        nbrs[f].insert(static_cast<int>(UniformInt(rng, 0, m - 1)));
      }
    }
  } else {
    for (int f = 0; f < n; ++f) {
      const int want = static_cast<int>(UniformInt(rng, 2, std::min(3, m)));
      while (static_cast<int>(nbrs[f].size()) < want) {
        nbrs[f].insert(static_cast<int>(UniformInt(rng, 0, m - 1)));
      }
    }
  }
  ValueMatrix wv(m, std::vector<Value>(n, 0));
  ValueMatrix fv(n, std::vector<Value>(m, 0));
  for (int f = 0; f < n; ++f) {
    for (int w : nbrs[f]) {
      wv[w][f] = Chance(rng, 90) ? UniformInt(rng, 1, v_max) : 0;
      fv[f][w] = UniformInt(rng, wv[w][f] == 0 ? 1 : 0, v_max);
    }
  }
  std::vector<int> caps(n);
  for (int& c : caps) c = Chance(rng, 90) ? 2 : 3;
  return *Instance::Create(std::move(caps), std::move(wv), std::move(fv));
}

Instance RandomSinglePositiveFirm(int m, int n, int max_cap, Value v_max,
                                  std::mt19937_64& rng) {
  ValueMatrix wv(m, std::vector<Value>(n, 0));
  ValueMatrix fv(n, std::vector<Value>(m, 0));
  for (int w = 0; w < m; ++w) {
    wv[w][UniformInt(rng, 0, n - 1)] = UniformInt(rng, 1, v_max);
  }
  for (auto& row : fv) {
    for (Value& v : row) v = UniformInt(rng, 0, v_max);
  }
  std::vector<int> caps(n);
  for (int& c : caps) c = static_cast<int>(UniformInt(rng, 1, max_cap));
  return *Instance::Create(std::move(caps), std::move(wv), std::move(fv));
}

Instance RandomUnitCapacity(int m, int n, Value v_max, int density_pct,
                            std::mt19937_64& rng) {
  ValueMatrix wv(m, std::vector<Value>(n, 0));
  ValueMatrix fv(n, std::vector<Value>(m, 0));
  for (auto& row : wv) {
    for (Value& v : row) v = Chance(rng, density_pct) ? UniformInt(rng, 1, v_max) : 0;
  }
  for (auto& row : fv) {
    for (Value& v : row) v = Chance(rng, density_pct) ? UniformInt(rng, 1, v_max) : 0;
  }
  return *Instance::Create(std::vector<int>(n, 1), std::move(wv), std::move(fv));
}

}  // namespace nsw
