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

#include <algorithm>

#include "doctest.h"
#include "splitmw/corpus.hpp"
#include "splitmw/flats.hpp"
#include "splitmw/graph.hpp"
#include "test_support.hpp"

using namespace splitmw;
using namespace splitmw::testing;

namespace {

// Cyclic flats straight from the definitions, using only the greedy rank.
std::vector<Mask> oracle_cyclic_flats(const Matroid& m) {
  std::vector<Mask> out;
  for (Mask f = 0; f <= m.ground_set(); ++f) {
    const int r = oracle_rank(m, f);
    bool flat = true;
    for (Element e = 0; e < m.size() && flat; ++e) {
      if (!contains(f, e)) flat = oracle_rank(m, f | bit(e)) > r;
    }
    bool cyclic = true;
    for (Element e : elements_of(f)) cyclic = cyclic && oracle_rank(m, f & ~bit(e)) == r;
    if (flat && cyclic) out.push_back(f);
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

}  // namespace

TEST_CASE("flats of small matroids") {
  const std::vector<Mask> expected = {0, mask_of({0}), mask_of({1}), mask_of({2}), mask_of({0, 1, 2})};
  CHECK(flats(uniform(2, 3)) == expected);
  CHECK(flats(minimal(2, 3)) == expected);
  CHECK(flats(uniform(0, 2)) == std::vector<Mask>{mask_of({0, 1})});
  CHECK_THROWS_AS(flats(uniform(1, 17)), Error);
}

TEST_CASE("cyclic flats of minimal(4,7)") {
  const CyclicFlatReport r = cyclic_flats(minimal(4, 7));
  CHECK(r.proper_flats == std::vector<Mask>{mask_of({4, 5, 6})});
  CHECK(r.flats == std::vector<Mask>{0, mask_of({4, 5, 6}), full_mask(7)});
  CHECK(r.ranks == std::vector<int>{0, 1, 4});
  CHECK(r.is_antichain);
  CHECK(r.is_connected_split);
  CHECK(r.is_split);
  CHECK_FALSE(r.is_paving);
  CHECK_FALSE(r.is_copaving);
}

TEST_CASE("cyclic flats of uniform(2,4)") {
  const CyclicFlatReport r = cyclic_flats(uniform(2, 4));
  CHECK(r.flats == std::vector<Mask>{0, full_mask(4)});
  CHECK(r.proper_flats.empty());
  CHECK(r.is_paving);
  CHECK(r.is_copaving);
  CHECK(is_connected_split(uniform(2, 4)));
}

TEST_CASE("doubled 4-cycle has a chain of proper cyclic flats") {
  const Matroid m = graphic(doubled_four_cycle());
  CHECK(m.size() == 6);
  CHECK(m.rank() == 3);
  const CyclicFlatReport r = cyclic_flats(m);
  CHECK(r.flats == oracle_cyclic_flats(m));
  CHECK(std::find(r.proper_flats.begin(), r.proper_flats.end(), mask_of({0, 1})) !=
        r.proper_flats.end());
  CHECK(std::find(r.proper_flats.begin(), r.proper_flats.end(), mask_of({0, 1, 2, 3})) !=
        r.proper_flats.end());
  CHECK_FALSE(r.is_antichain);
  REQUIRE(r.nested_pair.has_value());
  CHECK(r.nested_pair->first == mask_of({0, 1}));
  CHECK(r.nested_pair->second == mask_of({0, 1, 2, 3}));
  CHECK(is_connected(m));
  CHECK_FALSE(is_connected_split(m));
  CHECK_FALSE(is_split(m));
}

TEST_CASE("split classification of sums and degenerate matroids") {
  CHECK(is_split(direct_sum(minimal(4, 7), uniform(1, 3))));
  CHECK(is_split(uniform(0, 3)));
  CHECK(is_split(uniform(0, 0)));
  CHECK(is_split(direct_sum(uniform(2, 3), uniform(1, 2))));
  CHECK_FALSE(is_split(direct_sum(minimal(2, 4), minimal(2, 4))));
}

TEST_CASE("paving classification") {
  const Matroid k4 = graphic(complete_graph(4));
  // Oracle: smallest circuit of M(K4) is a triangle, size 3 = rank.
  int smallest = 64;
  for (Mask c = 1; c <= k4.ground_set(); ++c) {
    if (oracle_rank(k4, c) == popcount(c) - 1) {
      bool minimal_dependent = true;
      for (Element e : elements_of(c)) {
        minimal_dependent = minimal_dependent && oracle_independent(k4, c & ~bit(e));
      }
      if (minimal_dependent) smallest = std::min(smallest, popcount(c));
    }
  }
  CHECK(smallest == 3);
  CHECK(is_paving(k4));
  CHECK(is_copaving(k4));
}

TEST_CASE("cyclic flat enumeration matches the definitional oracle") {
  for (const Matroid& m : property_pool(11, 50, 8)) {
    CHECK(cyclic_flats(m).flats == oracle_cyclic_flats(m));
  }
}

TEST_CASE("cyclic flats complement under duality") {
  for (const auto& entry : standard_corpus(8, 60)) {
    const Matroid& m = entry.matroid;
    const auto primal = cyclic_flats(m).flats;
    std::vector<Mask> complemented;
    for (Mask f : cyclic_flats(dual(m)).flats) complemented.push_back(m.ground_set() & ~f);
    std::sort(complemented.begin(), complemented.end(), canonical_less);
    CHECK(primal == complemented);
    for (Mask f : primal) {
      CHECK(closure(m, f) == f);
      CHECK(coloops(restrict_to(m, f).matroid) == 0);
    }
  }
}

TEST_CASE("split class is closed under duality; paving and copaving are split") {
  for (const auto& entry : standard_corpus(9, 120)) {
    const Matroid& m = entry.matroid;
    CHECK(is_split(m) == is_split(dual(m)));
    if (is_clean(m)) {
      if (is_paving(m)) CHECK(is_split(m));
      if (is_copaving(m)) CHECK(is_split(m));
    }
  }
}

TEST_CASE("minimal matroids are connected split") {
  for (int n = 2; n <= 12; ++n) {
    for (int k = 1; k < n; ++k) CHECK(is_connected_split(minimal(k, n)));
  }
}
