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

#include "splitmw/corpus.hpp"

#include <random>
#include <string>

#include "splitmw/merino_welsh.hpp"

namespace splitmw {

Multigraph random_multigraph(std::uint64_t seed, int vertices, int edges,
                             bool allow_self_loops) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, vertices - 1);
  Multigraph g{vertices, {}};
  for (int i = 0; i < edges; ++i) {
    const int u = pick(rng);
    int v = pick(rng);
    while (!allow_self_loops && vertices > 1 && v == u) v = pick(rng);
    g.edges.emplace_back(u, v);
  }
  return g;
}

std::vector<CorpusEntry> minimal_corpus(int n_max) {
  std::vector<CorpusEntry> out;
  for (int n = 2; n <= n_max; ++n) {
    for (int k = 1; k < n; ++k) {
      out.push_back({"minimal(" + std::to_string(k) + "," + std::to_string(n) + ")",
                     minimal(k, n)});
    }
  }
  return out;
}

std::vector<CorpusEntry> uniform_corpus(int n_max) {
  std::vector<CorpusEntry> out;
  for (int n = 0; n <= n_max; ++n) {
    for (int k = 0; k <= n; ++k) {
      out.push_back({"uniform(" + std::to_string(k) + "," + std::to_string(n) + ")",
                     uniform(k, n)});
    }
  }
  return out;
}

std::vector<CorpusEntry> rank2_census_corpus(int n_max) {
  std::vector<CorpusEntry> out;
  for (int n = 2; n <= n_max; ++n) {
    for (const auto& parts : rank2_partitions(n)) {
      std::string name = "rank2(";
      for (std::size_t i = 0; i < parts.size(); ++i) {
        name += (i ? "," : "") + std::to_string(parts[i]);
      }
      out.push_back({name + ")", rank2_from_partition(parts)});
    }
  }
  return out;
}

std::vector<GraphEntry> random_graph_corpus(std::uint64_t seed, int count, int max_edges,
                                            bool allow_self_loops) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> vertex_count(2, 5);
  std::uniform_int_distribution<int> edge_count(1, max_edges);
  std::vector<GraphEntry> out;
  for (int i = 0; i < count; ++i) {
    const int v = vertex_count(rng);
    const int m = edge_count(rng);
    out.push_back({"graph#" + std::to_string(i),
                   random_multigraph(rng(), v, m, allow_self_loops)});
  }
  return out;
}

std::vector<GraphEntry> bridgeless_graph_corpus(std::uint64_t seed, int count, int max_edges) {
  std::vector<GraphEntry> out{
      {"triangle", cycle_graph(3)},
      {"double-edge", cycle_graph(2)},
      {"K4", complete_graph(4)},
      {"figure-1", figure_one_graph()},
      {"doubled-4-cycle", doubled_four_cycle()},
  };
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> vertex_count(2, 6);
  int attempt = 0;
  while (static_cast<int>(out.size()) < count) {
    const int v = vertex_count(rng);
    std::uniform_int_distribution<int> edge_count(v, max_edges);
    Multigraph g = random_multigraph(rng(), v, edge_count(rng), false);
    ++attempt;
    if (is_connected(g) && is_bridgeless(g)) {
      out.push_back({"bridgeless#" + std::to_string(attempt), std::move(g)});
    }
  }
  return out;
}

std::vector<CorpusEntry> standard_corpus(int n_max, int graphic_count, std::uint64_t seed) {
  std::vector<CorpusEntry> out = minimal_corpus(n_max);
  for (auto& e : uniform_corpus(n_max)) out.push_back(std::move(e));
  for (auto& e : rank2_census_corpus(n_max)) out.push_back(std::move(e));
  for (auto& g : random_graph_corpus(seed, graphic_count, n_max, true)) {
    out.push_back({"graphic " + g.name, graphic(g.graph)});
  }
  return out;
}

Multigraph figure_one_graph() {
  Multigraph g = cycle_graph(5);
  g.edges.emplace_back(g.edges[2]);
  g.edges.emplace_back(g.edges[2]);
  return g;
}

Multigraph doubled_four_cycle() {
  // a=0 b=1 c=2 d=3; edges ab, ab', bc, bc', cd, da.
  return Multigraph{4, {{0, 1}, {0, 1}, {1, 2}, {1, 2}, {2, 3}, {3, 0}}};
}

}  // namespace splitmw
