// Copyright 2026 The msls Authors.
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

#include "msls/matroid.h"

#include <limits>
#include <numeric>
#include <queue>
#include <set>
#include <string>

namespace msls {

std::string_view MatroidKindName(MatroidKind kind) {
  switch (kind) {
    case MatroidKind::kUniform:
      return "uniform";
    case MatroidKind::kPartition:
      return "partition";
    case MatroidKind::kGraphic:
      return "graphic";
  }
  return "unknown";
}

namespace {

class UnionFind {
 public:
  explicit UnionFind(int size) : parent_(size) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int Find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  // False when a and b were already connected.
  bool Unite(int a, int b) {
    a = Find(a);
    b = Find(b);
    if (a == b) return false;
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<int> parent_;
};

bool IsForest(const Matroid::Graphic& g, SubsetMask s) {
  UnionFind uf(g.vertices);
  for (int e : s.Elements()) {
    if (!uf.Unite(g.edges[e].first, g.edges[e].second)) return false;
  }
  return true;
}

// Shortest cycle length of a multigraph; 0 if acyclic.
int Girth(const Matroid::Graphic& g) {
  std::set<std::pair<int, int>> seen;
  for (const auto& [u, v] : g.edges) {
    if (u == v) return 1;
  }
  for (const auto& [u, v] : g.edges) {
    if (!seen.insert({std::min(u, v), std::max(u, v)}).second) return 2;
  }
  std::vector<std::vector<int>> adj(g.vertices);
  for (const auto& [u, v] : g.edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  int best = std::numeric_limits<int>::max();
  for (int source = 0; source < g.vertices; ++source) {
    std::vector<int> dist(g.vertices, -1);
    std::vector<int> parent(g.vertices, -1);
    std::queue<int> queue;
    dist[source] = 0;
    queue.push(source);
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop();
      for (int v : adj[u]) {
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          parent[v] = u;
          queue.push(v);
        } else if (parent[u] != v) {
          best = std::min(best, dist[u] + dist[v] + 1);
        }
      }
    }
  }
  return best == std::numeric_limits<int>::max() ? 0 : best;
}

}  // namespace

Matroid::Matroid(int n, Payload payload) : n_(n), payload_(std::move(payload)) {
  GroundSet::Of(n_);
  rank_ = RankOf(SubsetMask::Full(n_));
  const int c = ComputeMinCircuit();
  if (c > 0) min_circuit_ = c;
}

Matroid Matroid::MakeUniform(int n, int rank) {
  if (rank < 0) throw ValidationError("uniform matroid rank must be >= 0");
  return Matroid(n, Uniform{rank});
}

Matroid Matroid::MakePartition(std::vector<std::vector<int>> blocks,
                               std::vector<int> caps) {
  if (blocks.size() != caps.size()) {
    throw ValidationError("partition matroid needs one cap per block");
  }
  int n = 0;
  for (const auto& block : blocks) n += static_cast<int>(block.size());
  GroundSet::Of(n);
  std::vector<int> block_of(n, -1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (caps[b] < 0) throw ValidationError("partition caps must be >= 0");
    for (int e : blocks[b]) {
      if (e < 0 || e >= n || block_of[e] >= 0) {
        throw ValidationError("partition blocks must partition 0..n-1; bad "
                              "element " + std::to_string(e));
      }
      block_of[e] = static_cast<int>(b);
    }
  }
  return Matroid(n, Partition{std::move(blocks), std::move(caps),
                              std::move(block_of)});
}

Matroid Matroid::MakeGraphic(int vertices,
                             std::vector<std::pair<int, int>> edges) {
  if (vertices < 1) throw ValidationError("graphic matroid needs vertices");
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= vertices || v >= vertices) {
      throw ValidationError("edge endpoint outside vertex range");
    }
  }
  const int n = static_cast<int>(edges.size());
  return Matroid(n, Graphic{vertices, std::move(edges)});
}

MatroidKind Matroid::kind() const {
  switch (payload_.index()) {
    case 0:
      return MatroidKind::kUniform;
    case 1:
      return MatroidKind::kPartition;
    default:
      return MatroidKind::kGraphic;
  }
}

bool Matroid::IsIndependent(SubsetMask s) const {
  if (!s.FitsIn(n_)) return false;
  return std::visit(
      [s](const auto& p) -> bool {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, Uniform>) {
          return s.size() <= p.rank;
        } else if constexpr (std::is_same_v<T, Partition>) {
          std::vector<int> counts(p.caps.size(), 0);
          for (int e : s.Elements()) {
            if (++counts[p.block_of[e]] > p.caps[p.block_of[e]]) return false;
          }
          return true;
        } else {
          return IsForest(p, s);
        }
      },
      payload_);
}

int Matroid::RankOf(SubsetMask s) const {
  SubsetMask kept;
  for (int e : s.Elements()) {
    if (IsIndependent(kept.with(e))) kept = kept.with(e);
  }
  return kept.size();
}

int Matroid::ComputeMinCircuit() const {
  return std::visit(
      [this](const auto& p) -> int {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, Uniform>) {
          return n_ > p.rank ? p.rank + 1 : 0;
        } else if constexpr (std::is_same_v<T, Partition>) {
          int best = 0;
          for (std::size_t b = 0; b < p.blocks.size(); ++b) {
            if (static_cast<int>(p.blocks[b].size()) > p.caps[b]) {
              const int c = p.caps[b] + 1;
              if (best == 0 || c < best) best = c;
            }
          }
          return best;
        } else {
          return Girth(p);
        }
      },
      payload_);
}

SubsetMask Matroid::ExtendToBase(SubsetMask s) const {
  if (!IsIndependent(s)) {
    throw PreconditionError("cannot extend a dependent set to a base");
  }
  for (int e = 0; e < n_; ++e) {
    if (!s.contains(e) && IsIndependent(s.with(e))) s = s.with(e);
  }
  return s;
}

bool Matroid::IsBase(SubsetMask s) const {
  return s.size() == rank_ && IsIndependent(s);
}

ExchangeBijection Matroid::ExchangeBijectionBetween(SubsetMask s,
                                                    SubsetMask t) const {
  if (!IsBase(s) || !IsBase(t)) {
    throw PreconditionError("exchange bijection needs two bases");
  }
  const std::vector<int> left = (s - t).Elements();
  const std::vector<int> right = (t - s).Elements();
  const int size = static_cast<int>(left.size());
  std::vector<std::vector<int>> adj(size);
  for (int a = 0; a < size; ++a) {
    for (int b = 0; b < size; ++b) {
      if (IsIndependent(s.without(left[a]).with(right[b]))) adj[a].push_back(b);
    }
  }
  // Kuhn's augmenting paths; adjacency is scanned in ascending order so the
  // result is deterministic.
  std::vector<int> match_right(size, -1);
  for (int a = 0; a < size; ++a) {
    std::vector<char> visited(size, 0);
    auto augment = [&](auto&& self, int u) -> bool {
      for (int b : adj[u]) {
        if (visited[b]) continue;
        visited[b] = 1;
        if (match_right[b] < 0 || self(self, match_right[b])) {
          match_right[b] = u;
          return true;
        }
      }
      return false;
    };
    if (!augment(augment, a)) {
      throw InvariantError(
          "no perfect exchange matching between bases; matroid oracle is "
          "inconsistent");
    }
  }
  ExchangeBijection g;
  std::vector<int> match_left(size, -1);
  for (int b = 0; b < size; ++b) match_left[match_right[b]] = b;
  for (int a = 0; a < size; ++a) g.pairs.emplace_back(left[a], right[match_left[a]]);
  return g;
}

bool IsValidExchange(const Matroid& m, SubsetMask s, SubsetMask t,
                     const ExchangeBijection& g) {
  SubsetMask domain;
  SubsetMask image;
  for (const auto& [i, j] : g.pairs) {
    if (!(s - t).contains(i) || !(t - s).contains(j)) return false;
    if (domain.contains(i) || image.contains(j)) return false;
    domain = domain.with(i);
    image = image.with(j);
    if (!m.IsIndependent(s.without(i).with(j))) return false;
  }
  return domain == s - t && image == t - s;
}

}  // namespace msls
