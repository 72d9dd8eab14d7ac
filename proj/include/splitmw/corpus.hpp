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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "splitmw/graph.hpp"
#include "splitmw/matroid.hpp"

namespace splitmw {

struct CorpusEntry {
  std::string name;
  Matroid matroid;
};

struct GraphEntry {
  std::string name;
  Multigraph graph;
};

/// Random multigraph with the given vertex and edge counts. Parallel edges
/// always allowed; self-loops only when requested.
Multigraph random_multigraph(std::uint64_t seed, int vertices, int edges,
                             bool allow_self_loops);

std::vector<CorpusEntry> minimal_corpus(int n_max);
/// Every uniform(k, n) with 0 <= k <= n <= n_max.
std::vector<CorpusEntry> uniform_corpus(int n_max);
std::vector<CorpusEntry> rank2_census_corpus(int n_max);
std::vector<GraphEntry> random_graph_corpus(std::uint64_t seed, int count,
                                            int max_edges, bool allow_self_loops);
std::vector<GraphEntry> bridgeless_graph_corpus(std::uint64_t seed, int count,
                                                int max_edges);

/// Minimal and uniform families plus rank-2 census matroids with n <= n_max,
/// and `graphic_count` random graphic matroids on at most n_max edges.
std::vector<CorpusEntry> standard_corpus(int n_max, int graphic_count,
                                         std::uint64_t seed = 20240601);

/// Fixed test graphs.
Multigraph figure_one_graph();        // 5-cycle, one edge tripled
Multigraph doubled_four_cycle();      // 4-cycle with edges ab, bc doubled

}  // namespace splitmw
