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
#include <utility>
#include <vector>

#include "splitmw/matroid.hpp"

namespace splitmw {

/// Undirected multigraph; parallel edges and self-loops allowed. Edge i of
/// the graph is element i of its cycle matroid.
struct Multigraph {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;

  int edge_count() const { return static_cast<int>(edges.size()); }
  void validate() const;

  friend bool operator==(const Multigraph&, const Multigraph&) = default;
};

inline constexpr int kGraphicEdgeLimit = 20;
inline constexpr int kOrientationEdgeLimit = 15;

/// Number of connected components, isolated vertices included.
int component_count(const Multigraph& g);
bool is_connected(const Multigraph& g);
/// No edge whose removal disconnects its endpoints. Self-loops are never bridges.
bool is_bridgeless(const Multigraph& g);

/// Cycle matroid: bases are the maximal spanning forests.
Matroid graphic(const Multigraph& g, int edge_limit = kGraphicEdgeLimit);

// Brute-force graph oracles for the Tutte evaluations at (1,1), (2,0), (0,2).
// They share no code with the matroid layer.

/// Spanning trees of g; zero when g is disconnected.
std::uint64_t count_spanning_trees(const Multigraph& g);
std::uint64_t count_acyclic_orientations(const Multigraph& g);
std::uint64_t count_totally_cyclic_orientations(const Multigraph& g);

Multigraph cycle_graph(int length);
Multigraph complete_graph(int vertices);

}  // namespace splitmw
