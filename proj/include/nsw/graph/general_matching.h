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

// Maximum-weight matching on general graphs (Edmonds' blossom algorithm,
// primal-dual, O(V^3)). Follows the structure of Van Rantwijk's well-known
// reference implementation: vertex duals are stored undoubled and edge slack
// is u_i + u_j - 2 w_ij, so integral or exact weights keep every quantity in
// the weight's own number system.

#ifndef NSW_GRAPH_GENERAL_MATCHING_H_
#define NSW_GRAPH_GENERAL_MATCHING_H_

#include <algorithm>
#include <vector>

#include "absl/status/statusor.h"
#include "nsw/graph/weighted_graph.h"

namespace nsw {

template <typename W>
struct GeneralMatchingResult {
  std::vector<int> mate;   // Partner vertex or -1.
  std::vector<int> edges;  // Indices into the input edge list.
  W total_weight{};
};

namespace internal {

template <typename W>
class BlossomMatcher {
  using T = WeightTraits<W>;

 public:
  BlossomMatcher(const WeightedGraph<W>& g, bool max_cardinality)
      : g_(g), nv_(g.num_vertices), ne_(static_cast<int>(g.edges.size())),
        max_cardinality_(max_cardinality) {}

  std::vector<int> Run();

 private:
  int Endpoint(int p) const { return p % 2 == 0 ? g_.edges[p / 2].u : g_.edges[p / 2].v; }

  W Slack(int k) const {
    const auto& e = g_.edges[k];
    return dual_[e.u] + dual_[e.v] - T::Twice(e.weight);
  }

  template <typename F>
  void ForLeaves(int b, const F& fn) const {
    if (b < nv_) {
      fn(b);
      return;
    }
    for (int t : childs_[b]) ForLeaves(t, fn);
  }

  std::vector<int> Leaves(int b) const {
    std::vector<int> out;
    ForLeaves(b, [&](int v) { out.push_back(v); });
    return out;
  }

  // Python-style indexing into a cyclic list.
  static int Wrap(int j, int size) { return ((j % size) + size) % size; }

  void AssignLabel(int w, int t, int p);
  int ScanBlossom(int v, int w);
  void AddBlossom(int base, int k);
  void ExpandBlossom(int b, bool endstage);
  void AugmentBlossom(int b, int v);
  void AugmentMatching(int k);

  const WeightedGraph<W>& g_;
  const int nv_;
  const int ne_;
  const bool max_cardinality_;

  std::vector<std::vector<int>> neighbend_;
  std::vector<int> mate_, label_, labelend_, inblossom_, parent_, base_;
  std::vector<std::vector<int>> childs_, endps_, bestedges_;
  std::vector<bool> has_bestedges_;
  std::vector<int> bestedge_, unused_;
  std::vector<W> dual_;
  std::vector<bool> allowed_;
  std::vector<int> queue_;
};

template <typename W>
void BlossomMatcher<W>::AssignLabel(int w, int t, int p) {
  const int b = inblossom_[w];
  label_[w] = label_[b] = t;
  labelend_[w] = labelend_[b] = p;
  bestedge_[w] = bestedge_[b] = -1;
  if (t == 1) {
    ForLeaves(b, [&](int v) { queue_.push_back(v); });
  } else if (t == 2) {
    const int base = base_[b];
    AssignLabel(Endpoint(mate_[base]), 1, mate_[base] ^ 1);
  }
}

// Walks back from v and w towards the roots; returns the base of a new
// blossom or -1 when an augmenting path was found.
template <typename W>
int BlossomMatcher<W>::ScanBlossom(int v, int w) {
  std::vector<int> path;
  int base = -1;
  while (v != -1 || w != -1) {
    int b = inblossom_[v];
    if (label_[b] & 4) {
      base = base_[b];
      break;
    }
    path.push_back(b);
    label_[b] = 5;
    if (labelend_[b] == -1) {
      v = -1;
    } else {
      v = Endpoint(labelend_[b]);
      b = inblossom_[v];
      v = Endpoint(labelend_[b]);
    }
    if (w != -1) std::swap(v, w);
  }
  for (int b : path) label_[b] = 1;
  return base;
}

template <typename W>
void BlossomMatcher<W>::AddBlossom(int base, int k) {
  int v = g_.edges[k].u;
  int w = g_.edges[k].v;
  const int bb = inblossom_[base];
  int bv = inblossom_[v];
  int bw = inblossom_[w];
  const int b = unused_.back();
  unused_.pop_back();
  base_[b] = base;
  parent_[b] = -1;
  parent_[bb] = b;
  std::vector<int>& path = childs_[b];
  std::vector<int>& endps = endps_[b];
  path.clear();
  endps.clear();
  while (bv != bb) {
    parent_[bv] = b;
    path.push_back(bv);
    endps.push_back(labelend_[bv]);
    v = Endpoint(labelend_[bv]);
    bv = inblossom_[v];
  }
  path.push_back(bb);
  std::reverse(path.begin(), path.end());
  std::reverse(endps.begin(), endps.end());
  endps.push_back(2 * k);
  while (bw != bb) {
    parent_[bw] = b;
    path.push_back(bw);
    endps.push_back(labelend_[bw] ^ 1);
    w = Endpoint(labelend_[bw]);
    bw = inblossom_[w];
  }
  label_[b] = 1;
  labelend_[b] = labelend_[bb];
  dual_[b] = T::Zero();
  for (int leaf : Leaves(b)) {
    if (label_[inblossom_[leaf]] == 2) queue_.push_back(leaf);
    inblossom_[leaf] = b;
  }
  // Least-slack edges from the new blossom to each neighboring S-blossom.
  std::vector<int> bestedgeto(2 * nv_, -1);
  for (int sub : path) {
    std::vector<std::vector<int>> nblists;
    if (!has_bestedges_[sub]) {
      for (int leaf : Leaves(sub)) {
        std::vector<int> list;
        for (int p : neighbend_[leaf]) list.push_back(p / 2);
        nblists.push_back(std::move(list));
      }
    } else {
      nblists.push_back(bestedges_[sub]);
    }
    for (const auto& list : nblists) {
      for (int e : list) {
        int i = g_.edges[e].u;
        int j = g_.edges[e].v;
        if (inblossom_[j] == b) std::swap(i, j);
        const int bj = inblossom_[j];
        if (bj != b && label_[bj] == 1 &&
            (bestedgeto[bj] == -1 || Slack(e) < Slack(bestedgeto[bj]))) {
          bestedgeto[bj] = e;
        }
      }
    }
    has_bestedges_[sub] = false;
    bestedges_[sub].clear();
    bestedge_[sub] = -1;
  }
  bestedges_[b].clear();
  for (int e : bestedgeto) {
    if (e != -1) bestedges_[b].push_back(e);
  }
  has_bestedges_[b] = true;
  bestedge_[b] = -1;
  for (int e : bestedges_[b]) {
    if (bestedge_[b] == -1 || Slack(e) < Slack(bestedge_[b])) bestedge_[b] = e;
  }
}

template <typename W>
void BlossomMatcher<W>::ExpandBlossom(int b, bool endstage) {
  for (int s : std::vector<int>(childs_[b])) {
    parent_[s] = -1;
    if (s < nv_) {
      inblossom_[s] = s;
    } else if (endstage && T::IsZero(dual_[s])) {
      ExpandBlossom(s, endstage);
    } else {
      ForLeaves(s, [&](int v) { inblossom_[v] = s; });
    }
  }
  if (!endstage && label_[b] == 2) {
    // Relabel the sub-blossoms on the even-length path from the entry child
    // to the base.
    const std::vector<int>& ch = childs_[b];
    const std::vector<int>& ep = endps_[b];
    const int size = static_cast<int>(ch.size());
    const int entrychild = inblossom_[Endpoint(labelend_[b] ^ 1)];
    int j = static_cast<int>(std::find(ch.begin(), ch.end(), entrychild) - ch.begin());
    int jstep, endptrick;
    if (j & 1) {
      j -= size;
      jstep = 1;
      endptrick = 0;
    } else {
      jstep = -1;
      endptrick = 1;
    }
    int p = labelend_[b];
    while (j != 0) {
      label_[Endpoint(p ^ 1)] = 0;
      label_[Endpoint(ep[Wrap(j - endptrick, size)] ^ endptrick ^ 1)] = 0;
      AssignLabel(Endpoint(p ^ 1), 2, p);
      allowed_[ep[Wrap(j - endptrick, size)] / 2] = true;
      j += jstep;
      p = ep[Wrap(j - endptrick, size)] ^ endptrick;
      allowed_[p / 2] = true;
      j += jstep;
    }
    int bv = ch[Wrap(j, size)];
    label_[Endpoint(p ^ 1)] = label_[bv] = 2;
    labelend_[Endpoint(p ^ 1)] = labelend_[bv] = p;
    bestedge_[bv] = -1;
    j += jstep;
    while (ch[Wrap(j, size)] != entrychild) {
      bv = ch[Wrap(j, size)];
      if (label_[bv] == 1) {
        j += jstep;
        continue;
      }
      int labeled = -1;
      for (int v : Leaves(bv)) {
        if (label_[v] != 0) {
          labeled = v;
          break;
        }
      }
      if (labeled != -1) {
        label_[labeled] = 0;
        label_[Endpoint(mate_[base_[bv]])] = 0;
        AssignLabel(labeled, 2, labelend_[labeled]);
      }
      j += jstep;
    }
  }
  label_[b] = labelend_[b] = -1;
  childs_[b].clear();
  endps_[b].clear();
  base_[b] = -1;
  bestedges_[b].clear();
  has_bestedges_[b] = false;
  bestedge_[b] = -1;
  unused_.push_back(b);
}

// Swaps matched and unmatched edges inside blossom b so that v becomes its
// base.
template <typename W>
void BlossomMatcher<W>::AugmentBlossom(int b, int v) {
  int t = v;
  while (parent_[t] != b) t = parent_[t];
  if (t >= nv_) AugmentBlossom(t, v);
  std::vector<int>& ch = childs_[b];
  std::vector<int>& ep = endps_[b];
  const int size = static_cast<int>(ch.size());
  const int i = static_cast<int>(std::find(ch.begin(), ch.end(), t) - ch.begin());
  int j = i;
  int jstep, endptrick;
  if (i & 1) {
    j -= size;
    jstep = 1;
    endptrick = 0;
  } else {
    jstep = -1;
    endptrick = 1;
  }
  while (j != 0) {
    j += jstep;
    t = ch[Wrap(j, size)];
    const int p = ep[Wrap(j - endptrick, size)] ^ endptrick;
    if (t >= nv_) AugmentBlossom(t, Endpoint(p));
    j += jstep;
    t = ch[Wrap(j, size)];
    if (t >= nv_) AugmentBlossom(t, Endpoint(p ^ 1));
    mate_[Endpoint(p)] = p ^ 1;
    mate_[Endpoint(p ^ 1)] = p;
  }
  std::rotate(ch.begin(), ch.begin() + i, ch.end());
  std::rotate(ep.begin(), ep.begin() + i, ep.end());
  base_[b] = base_[ch[0]];
}

template <typename W>
void BlossomMatcher<W>::AugmentMatching(int k) {
  const int ends[2][2] = {{g_.edges[k].u, 2 * k + 1}, {g_.edges[k].v, 2 * k}};
  for (const auto& [start, first_p] : ends) {
    int s = start;
    int p = first_p;
    while (true) {
      const int bs = inblossom_[s];
      if (bs >= nv_) AugmentBlossom(bs, s);
      mate_[s] = p;
      if (labelend_[bs] == -1) break;
      const int t = Endpoint(labelend_[bs]);
      const int bt = inblossom_[t];
      s = Endpoint(labelend_[bt]);
      const int j = Endpoint(labelend_[bt] ^ 1);
      if (bt >= nv_) AugmentBlossom(bt, j);
      mate_[j] = labelend_[bt];
      p = labelend_[bt] ^ 1;
    }
  }
}

template <typename W>
std::vector<int> BlossomMatcher<W>::Run() {
  if (nv_ == 0) return {};
  W maxweight = T::Zero();
  for (const auto& e : g_.edges) maxweight = std::max(maxweight, e.weight);

  neighbend_.assign(nv_, {});
  for (int k = 0; k < ne_; ++k) {
    neighbend_[g_.edges[k].u].push_back(2 * k + 1);
    neighbend_[g_.edges[k].v].push_back(2 * k);
  }
  mate_.assign(nv_, -1);
  label_.assign(2 * nv_, 0);
  labelend_.assign(2 * nv_, -1);
  inblossom_.resize(nv_);
  for (int v = 0; v < nv_; ++v) inblossom_[v] = v;
  parent_.assign(2 * nv_, -1);
  childs_.assign(2 * nv_, {});
  endps_.assign(2 * nv_, {});
  base_.assign(2 * nv_, -1);
  for (int v = 0; v < nv_; ++v) base_[v] = v;
  bestedge_.assign(2 * nv_, -1);
  bestedges_.assign(2 * nv_, {});
  has_bestedges_.assign(2 * nv_, false);
  unused_.clear();
  for (int b = 2 * nv_ - 1; b >= nv_; --b) unused_.push_back(b);
  std::reverse(unused_.begin(), unused_.end());
  dual_.assign(2 * nv_, T::Zero());
  for (int v = 0; v < nv_; ++v) dual_[v] = maxweight;
  allowed_.assign(ne_, false);

  for (int stage = 0; stage < nv_; ++stage) {
    std::fill(label_.begin(), label_.end(), 0);
    std::fill(bestedge_.begin(), bestedge_.end(), -1);
    for (int b = nv_; b < 2 * nv_; ++b) {
      bestedges_[b].clear();
      has_bestedges_[b] = false;
    }
    std::fill(allowed_.begin(), allowed_.end(), false);
    queue_.clear();
    for (int v = 0; v < nv_; ++v) {
      if (mate_[v] == -1 && label_[inblossom_[v]] == 0) AssignLabel(v, 1, -1);
    }
    bool augmented = false;
    while (true) {
      while (!queue_.empty() && !augmented) {
        const int v = queue_.back();
        queue_.pop_back();
        for (int p : neighbend_[v]) {
          const int k = p / 2;
          const int w = Endpoint(p);
          if (inblossom_[v] == inblossom_[w]) continue;
          W kslack{};
          if (!allowed_[k]) {
            kslack = Slack(k);
            if (T::IsNonPositive(kslack)) allowed_[k] = true;
          }
          if (allowed_[k]) {
            if (label_[inblossom_[w]] == 0) {
              AssignLabel(w, 2, p ^ 1);
            } else if (label_[inblossom_[w]] == 1) {
              const int base = ScanBlossom(v, w);
              if (base >= 0) {
                AddBlossom(base, k);
              } else {
                AugmentMatching(k);
                augmented = true;
                break;
              }
            } else if (label_[w] == 0) {
              label_[w] = 2;
              labelend_[w] = p ^ 1;
            }
          } else if (label_[inblossom_[w]] == 1) {
            const int b = inblossom_[v];
            if (bestedge_[b] == -1 || kslack < Slack(bestedge_[b])) bestedge_[b] = k;
          } else if (label_[w] == 0) {
            if (bestedge_[w] == -1 || kslack < Slack(bestedge_[w])) bestedge_[w] = k;
          }
        }
      }
      if (augmented) break;

      // No augmenting path under the current duals: pick the dual change.
      int deltatype = -1;
      W delta{};
      int deltaedge = -1, deltablossom = -1;
      if (!max_cardinality_) {
        deltatype = 1;
        delta = *std::min_element(dual_.begin(), dual_.begin() + nv_);
      }
      for (int v = 0; v < nv_; ++v) {
        if (label_[inblossom_[v]] == 0 && bestedge_[v] != -1) {
          W d = Slack(bestedge_[v]);
          if (deltatype == -1 || d < delta) {
            delta = std::move(d);
            deltatype = 2;
            deltaedge = bestedge_[v];
          }
        }
      }
      for (int b = 0; b < 2 * nv_; ++b) {
        if (parent_[b] == -1 && label_[b] == 1 && bestedge_[b] != -1) {
          W d = T::Half(Slack(bestedge_[b]));
          if (deltatype == -1 || d < delta) {
            delta = std::move(d);
            deltatype = 3;
            deltaedge = bestedge_[b];
          }
        }
      }
      for (int b = nv_; b < 2 * nv_; ++b) {
        if (base_[b] >= 0 && parent_[b] == -1 && label_[b] == 2 &&
            (deltatype == -1 || dual_[b] < delta)) {
          delta = dual_[b];
          deltatype = 4;
          deltablossom = b;
        }
      }
      if (deltatype == -1) {
        // Maximum cardinality reached; one final dual step for optimality.
        deltatype = 1;
        delta = std::max(T::Zero(),
                         *std::min_element(dual_.begin(), dual_.begin() + nv_));
      }
      for (int v = 0; v < nv_; ++v) {
        if (label_[inblossom_[v]] == 1) {
          dual_[v] = dual_[v] - delta;
        } else if (label_[inblossom_[v]] == 2) {
          dual_[v] = dual_[v] + delta;
        }
      }
      for (int b = nv_; b < 2 * nv_; ++b) {
        if (base_[b] >= 0 && parent_[b] == -1) {
          if (label_[b] == 1) {
            dual_[b] = dual_[b] + delta;
          } else if (label_[b] == 2) {
            dual_[b] = dual_[b] - delta;
          }
        }
      }
      if (deltatype == 1) break;
      if (deltatype == 2) {
        allowed_[deltaedge] = true;
        int i = g_.edges[deltaedge].u;
        if (label_[inblossom_[i]] == 0) i = g_.edges[deltaedge].v;
        queue_.push_back(i);
      } else if (deltatype == 3) {
        allowed_[deltaedge] = true;
        queue_.push_back(g_.edges[deltaedge].u);
      } else {
        ExpandBlossom(deltablossom, false);
      }
    }
    if (!augmented) break;
    for (int b = nv_; b < 2 * nv_; ++b) {
      if (parent_[b] == -1 && base_[b] >= 0 && label_[b] == 1 && T::IsZero(dual_[b])) {
        ExpandBlossom(b, true);
      }
    }
  }
  return mate_;
}

// `raw_mate[v]` is the endpoint index 2k or 2k+1 of v's matched edge k.
template <typename W>
GeneralMatchingResult<W> Collect(const WeightedGraph<W>& g,
                                 const std::vector<int>& raw_mate) {
  GeneralMatchingResult<W> r;
  r.total_weight = WeightTraits<W>::Zero();
  r.mate.assign(g.num_vertices, -1);
  for (int v = 0; v < g.num_vertices; ++v) {
    if (raw_mate[v] < 0) continue;
    const int k = raw_mate[v] / 2;
    const auto& e = g.edges[k];
    r.mate[v] = e.u == v ? e.v : e.u;
    if (v == std::min(e.u, e.v)) {
      r.edges.push_back(k);
      r.total_weight = r.total_weight + e.weight;
    }
  }
  std::sort(r.edges.begin(), r.edges.end());
  return r;
}

}  // namespace internal

// Maximum-weight matching; with max_cardinality, the heaviest among the
// matchings of maximum size.
template <typename W>
GeneralMatchingResult<W> MaxWeightMatching(const WeightedGraph<W>& g,
                                           bool max_cardinality = false) {
  internal::BlossomMatcher<W> matcher(g, max_cardinality);
  return internal::Collect(g, matcher.Run());
}

// Maximum-weight perfect matching, or FailedPrecondition if the graph has
// none.
template <typename W>
absl::StatusOr<GeneralMatchingResult<W>> MaxWeightPerfectMatching(
    const WeightedGraph<W>& g) {
  if (g.num_vertices % 2 != 0) {
    return absl::FailedPreconditionError("odd vertex count: no perfect matching");
  }
  GeneralMatchingResult<W> r = MaxWeightMatching(g, /*max_cardinality=*/true);
  for (int v : r.mate) {
    if (v == -1) return absl::FailedPreconditionError("graph has no perfect matching");
  }
  return r;
}

}  // namespace nsw

#endif  // NSW_GRAPH_GENERAL_MATCHING_H_
