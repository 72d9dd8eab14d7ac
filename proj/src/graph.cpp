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

#include "splitmw/graph.hpp"

#include <numeric>
#include <string>

namespace splitmw {
namespace {

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<int> parent_;
};

void require_edges(const Multigraph& g, int limit, const char* what) {
  if (g.edge_count() > limit) {
    throw Error(ErrorKind::kOverLimit, std::string(what) + " allows at most " +
                                           std::to_string(limit) + " edges, got " +
                                           std::to_string(g.edge_count()));
  }
}

// Is `edges` (a subset) a forest?
bool is_forest(const Multigraph& g, Mask edges) {
  DisjointSets sets(g.vertex_count);
  for (Mask rest = edges; rest; rest &= rest - 1) {
    const auto& [u, v] = g.edges[std::countr_zero(rest)];
    if (!sets.unite(u, v)) return false;
  }
  return true;
}

Mask next_combination(Mask x) {
  const Mask c = x & -x;
  const Mask r = x + c;
  return (((r ^ x) >> 2) / c) | r;
}

// Calls f on each size-k subset of an m-element set.
template <typename F>
void for_each_combination(int m, int k, F&& f) {
  if (k == 0) {
    f(Mask{0});
    return;
  }
  if (k > m) return;
  const Mask limit = Mask{1} << m;
  for (Mask s = full_mask(k); s < limit; s = next_combination(s)) f(s);
}

// Adjacency lists of the directed graph given by an orientation: edge i
// runs u->v when bit i of `reversed` is clear.
std::vector<std::vector<int>> orient(const Multigraph& g, Mask reversed) {
  std::vector<std::vector<int>> out(g.vertex_count);
  for (int i = 0; i < g.edge_count(); ++i) {
    auto [u, v] = g.edges[i];
    if (contains(reversed, i)) std::swap(u, v);
    out[u].push_back(v);
  }
  return out;
}

bool has_directed_cycle(const std::vector<std::vector<int>>& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> indegree(n, 0);
  for (const auto& targets : adj) {
    for (int v : targets) ++indegree[v];
  }
  std::vector<int> ready;
  for (int v = 0; v < n; ++v) {
    if (indegree[v] == 0) ready.push_back(v);
  }
  int removed = 0;
  while (!ready.empty()) {
    const int u = ready.back();
    ready.pop_back();
    ++removed;
    for (int v : adj[u]) {
      if (--indegree[v] == 0) ready.push_back(v);
    }
  }
  return removed != n;
}

bool reaches(const std::vector<std::vector<int>>& adj, int from, int to) {
  std::vector<char> seen(adj.size(), 0);
  std::vector<int> stack{from};
  seen[from] = 1;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    if (u == to) return true;
    for (int v : adj[u]) {
      if (!seen[v]) {
        seen[v] = 1;
        stack.push_back(v);
      }
    }
  }
  return false;
}

}  // namespace

void Multigraph::validate() const {
  if (vertex_count < 0) throw Error(ErrorKind::kOutOfRange, "negative vertex count");
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count) {
      throw Error(ErrorKind::kOutOfRange, "edge endpoint outside [0, " +
                                              std::to_string(vertex_count) + ")");
    }
  }
}

int component_count(const Multigraph& g) {
  g.validate();
  DisjointSets sets(g.vertex_count);
  int count = g.vertex_count;
  for (const auto& [u, v] : g.edges) {
    if (sets.unite(u, v)) --count;
  }
  return count;
}

bool is_connected(const Multigraph& g) { return component_count(g) <= 1; }

bool is_bridgeless(const Multigraph& g) {
  const int base = component_count(g);
  for (int i = 0; i < g.edge_count(); ++i) {
    Multigraph without = g;
    without.edges.erase(without.edges.begin() + i);
    if (component_count(without) > base) return false;
  }
  return true;
}

Matroid graphic(const Multigraph& g, int edge_limit) {
  g.validate();
  require_edges(g, edge_limit, "graphic()");
  const int m = g.edge_count();
  const int rank = g.vertex_count - component_count(g);
  std::vector<Mask> bases;
  for_each_combination(m, rank, [&](Mask s) {
    if (is_forest(g, s)) bases.push_back(s);
  });
  return Matroid::from_trusted_bases(m, rank, std::move(bases));
}

std::uint64_t count_spanning_trees(const Multigraph& g) {
  g.validate();
  require_edges(g, kGraphicEdgeLimit, "count_spanning_trees()");
  if (g.vertex_count == 0) return 0;
  std::uint64_t count = 0;
  for_each_combination(g.edge_count(), g.vertex_count - 1, [&](Mask s) {
    if (is_forest(g, s)) ++count;
  });
  return count;
}

std::uint64_t count_acyclic_orientations(const Multigraph& g) {
  g.validate();
  require_edges(g, kOrientationEdgeLimit, "count_acyclic_orientations()");
  for (const auto& [u, v] : g.edges) {
    if (u == v) return 0;
  }
  std::uint64_t count = 0;
  const Mask total = Mask{1} << g.edge_count();
  for (Mask reversed = 0; reversed < total; ++reversed) {
    if (!has_directed_cycle(orient(g, reversed))) ++count;
  }
  return count;
}

std::uint64_t count_totally_cyclic_orientations(const Multigraph& g) {
  g.validate();
  require_edges(g, kOrientationEdgeLimit, "count_totally_cyclic_orientations()");
  std::uint64_t count = 0;
  const Mask total = Mask{1} << g.edge_count();
  for (Mask reversed = 0; reversed < total; ++reversed) {
    const auto adj = orient(g, reversed);
    bool every_edge_cyclic = true;
    for (int i = 0; i < g.edge_count() && every_edge_cyclic; ++i) {
      auto [u, v] = g.edges[i];
      if (contains(reversed, i)) std::swap(u, v);
      every_edge_cyclic = reaches(adj, v, u);
    }
    if (every_edge_cyclic) ++count;
  }
  return count;
}

Multigraph cycle_graph(int length) {
  Multigraph g{length, {}};
  for (int i = 0; i < length; ++i) g.edges.emplace_back(i, (i + 1) % length);
  return g;
}

Multigraph complete_graph(int vertices) {
  Multigraph g{vertices, {}};
  for (int u = 0; u < vertices; ++u) {
    for (int v = u + 1; v < vertices; ++v) g.edges.emplace_back(u, v);
  }
  return g;
}

}  // namespace splitmw
