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

#include "doctest.h"
#include "splitmw/corpus.hpp"
#include "splitmw/graph.hpp"
#include "splitmw/tutte.hpp"

using namespace splitmw;

TEST_CASE("orientation oracles on small graphs") {
  const Multigraph triangle = cycle_graph(3);
  CHECK(count_spanning_trees(triangle) == 3);
  CHECK(count_acyclic_orientations(triangle) == 6);
  CHECK(count_totally_cyclic_orientations(triangle) == 2);

  const Multigraph edge{2, {{0, 1}}};
  CHECK(count_spanning_trees(edge) == 1);
  CHECK(count_acyclic_orientations(edge) == 2);
  CHECK(count_totally_cyclic_orientations(edge) == 0);

  const Multigraph double_edge = cycle_graph(2);
  CHECK(count_spanning_trees(double_edge) == 2);
  CHECK(count_acyclic_orientations(double_edge) == 2);
  CHECK(count_totally_cyclic_orientations(double_edge) == 2);
}

TEST_CASE("orientation oracle edge cases") {
  const Multigraph self_loop{1, {{0, 0}}};
  CHECK(count_acyclic_orientations(self_loop) == 0);
  CHECK(count_totally_cyclic_orientations(self_loop) == 2);
  CHECK(count_spanning_trees(Multigraph{2, {}}) == 0);

  Multigraph big{2, std::vector<std::pair<int, int>>(16, {0, 1})};
  CHECK_THROWS_AS(count_acyclic_orientations(big), Error);
  CHECK_THROWS_AS(count_totally_cyclic_orientations(big), Error);
  CHECK_THROWS_AS((Multigraph{2, {{0, 2}}}.validate()), Error);
}

TEST_CASE("graph predicates") {
  CHECK(is_bridgeless(cycle_graph(4)));
  CHECK_FALSE(is_bridgeless(Multigraph{3, {{0, 1}, {1, 2}}}));
  CHECK(is_bridgeless(Multigraph{1, {{0, 0}}}));
  CHECK(component_count(Multigraph{4, {{0, 1}}}) == 3);
}

TEST_CASE("spanning trees equal basis count for connected graphs") {
  for (const auto& g : random_graph_corpus(41, 80, 12, true)) {
    if (!is_connected(g.graph)) continue;
    CHECK(count_spanning_trees(g.graph) == graphic(g.graph).basis_count());
  }
}

TEST_CASE("Tutte evaluations match orientation counts on random multigraphs") {
  for (const auto& g : random_graph_corpus(43, 60, 10, true)) {
    const TuttePolynomial t = tutte_dc(graphic(g.graph));
    CHECK(evaluate(t, 2, 0) == count_acyclic_orientations(g.graph));
    if (is_connected(g.graph)) {
      CHECK(evaluate(t, 1, 1) == count_spanning_trees(g.graph));
    }
    if (is_connected(g.graph) && is_bridgeless(g.graph)) {
      CHECK(evaluate(t, 0, 2) == count_totally_cyclic_orientations(g.graph));
    }
  }
}
