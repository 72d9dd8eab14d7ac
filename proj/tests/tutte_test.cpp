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

#include <future>
#include <random>

#include "doctest.h"
#include "splitmw/corpus.hpp"
#include "splitmw/graph.hpp"
#include "splitmw/tutte.hpp"
#include "test_support.hpp"

using namespace splitmw;
using namespace splitmw::testing;

namespace {

TuttePolynomial poly(std::initializer_list<std::tuple<int, int, int>> terms) {
  int dx = 0, dy = 0;
  for (auto [i, j, c] : terms) {
    dx = std::max(dx, i);
    dy = std::max(dy, j);
  }
  TuttePolynomial t(dx, dy);
  for (auto [i, j, c] : terms) t.coeff(i, j) = c;
  return t;
}

}  // namespace

TEST_CASE("subset-sum engine on closed forms") {
  CHECK(tutte_subset_sum(uniform(1, 3)) == poly({{1, 0, 1}, {0, 1, 1}, {0, 2, 1}}));
  CHECK(tutte_subset_sum(uniform(1, 1)) == poly({{1, 0, 1}}));
  const TuttePolynomial expected = poly({{2, 0, 1}, {1, 0, 1}, {0, 1, 1}});
  CHECK(oracle_tutte(minimal(2, 3)) == expected);
  CHECK(tutte_subset_sum(minimal(2, 3)) == expected);
  CHECK(tutte_subset_sum(minimal(2, 3)).to_string() == "x^2 + x + y");
  CHECK(tutte_subset_sum(uniform(0, 0)) == TuttePolynomial::one());
  CHECK_THROWS_AS(tutte_subset_sum(uniform(1, 21)), Error);
}

TEST_CASE("deletion-contraction engine examples") {
  CHECK(evaluate(tutte_dc(minimal(4, 7)), 1, 1) == 13);
  CHECK(tutte_dc(uniform(0, 2)) == poly({{0, 2, 1}}));
  const Matroid triangle = graphic(cycle_graph(3));
  CHECK(tutte_dc(triangle) == tutte_subset_sum(triangle));
  CHECK(tutte_dc(triangle) == poly({{2, 0, 1}, {1, 0, 1}, {0, 1, 1}}));
}

TEST_CASE("uniform closed form matches the oracle") {
  for (int n = 0; n <= 9; ++n) {
    for (int k = 0; k <= n; ++k) CHECK(tutte_uniform(k, n) == oracle_tutte(uniform(k, n)));
  }
}

TEST_CASE("evaluation") {
  for (int n = 2; n <= 20; ++n) {
    const TuttePolynomial t = tutte_dc(uniform(1, n));
    CHECK(evaluate(t, 2, 0) == 2);
    CHECK(evaluate(t, 0, 2) == (BigInt(1) << n) - 2);
    CHECK(evaluate(t, 1, 1) == n);
  }
  // 0^0 = 1: the constant term survives at the origin.
  CHECK(evaluate(poly({{0, 0, 5}, {1, 1, 3}}), 0, 0) == 5);
  // Evaluations beyond 64 bits stay exact.
  CHECK(evaluate(tutte_uniform(1, 20), 0, 1000) > BigInt(1) << 150);
}

TEST_CASE("engines agree with the greedy-rank oracle") {
  for (const Matroid& m : property_pool(21, 60, 9)) {
    const TuttePolynomial expected = oracle_tutte(m);
    CHECK(tutte_subset_sum(m) == expected);
    CHECK(tutte_dc(m) == expected);
  }
}

TEST_CASE("engine options do not change results") {
  TutteEngineOptions plain;
  plain.canonicalize = false;
  plain.uniform_shortcut = false;
  TutteEngine plain_engine(plain);
  TutteEngineOptions tiny;
  tiny.memo_capacity_bytes = 2048;
  TutteEngine tiny_engine(tiny);
  for (const auto& entry : standard_corpus(10, 40)) {
    const TuttePolynomial reference = tutte_subset_sum(entry.matroid);
    CHECK(plain_engine.compute(entry.matroid) == reference);
    CHECK(tiny_engine.compute(entry.matroid) == reference);
  }
  CHECK(tiny_engine.stats().memo_bytes <= 2048);
  CHECK(tiny_engine.stats().evictions > 0);
}

TEST_CASE("memo is reused across calls") {
  TutteEngine engine;
  const Matroid k5 = graphic(complete_graph(5));
  const TuttePolynomial first = engine.compute(k5);
  const auto hits_before = engine.stats().memo_hits;
  CHECK(engine.compute(k5) == first);
  CHECK(engine.stats().memo_hits > hits_before);
  CHECK(first == tutte_subset_sum(k5));
  engine.clear();
  CHECK(engine.stats().memo_entries == 0);
}

TEST_CASE("shared engine gives identical results under concurrency") {
  const auto corpus = standard_corpus(9, 40);
  TutteEngine shared;
  std::vector<std::future<bool>> jobs;
  for (int t = 0; t < 4; ++t) {
    jobs.push_back(std::async(std::launch::async, [&, t] {
      bool ok = true;
      for (std::size_t i = t; i < corpus.size(); i += 2) {
        ok = ok && shared.compute(corpus[i].matroid) == tutte_subset_sum(corpus[i].matroid);
      }
      return ok;
    }));
  }
  for (auto& job : jobs) CHECK(job.get());
}

TEST_CASE("Tutte polynomial invariants on the corpus") {
  TutteEngine engine;
  for (const auto& entry : standard_corpus(10, 80)) {
    const Matroid& m = entry.matroid;
    const TuttePolynomial t = engine.compute(m);
    CHECK(t.x_degree() <= m.rank());
    CHECK(t.y_degree() <= m.corank());
    for (int i = 0; i <= t.x_degree(); ++i) {
      for (int j = 0; j <= t.y_degree(); ++j) CHECK(t.coeff(i, j) >= 0);
    }
    CHECK(evaluate(t, 1, 1) == m.basis_count());
    if (m.size() >= 1) CHECK(t.at(0, 0) == 0);
    CHECK(engine.compute(dual(m)) == t.transposed());
    if (m.rank() == 2 && is_clean(m)) {
      CHECK(t.at(2, 0) == 1);
      CHECK(t.at(0, m.size() - 2) == 1);
      CHECK(evaluate(t, 2, 0) * evaluate(t, 0, 2) >= BigInt(1) << m.size());
    }
  }
}

TEST_CASE("direct sums multiply Tutte polynomials") {
  const auto pool = property_pool(23, 30, 7);
  for (std::size_t i = 0; i + 1 < pool.size(); i += 2) {
    const Matroid& a = pool[i];
    const Matroid& b = pool[i + 1];
    CHECK(tutte_dc(direct_sum(a, b)) == tutte_dc(a) * tutte_dc(b));
  }
}

TEST_CASE("pivot prefers the largest parallel class") {
  CHECK(pick_pivot(minimal(4, 7)) == 4);
  CHECK(pick_pivot(uniform(2, 4)) == 0);
  CHECK(pick_pivot(rank2_from_partition(std::vector<int>{1, 3, 2})) == 1);
}

TEST_CASE("polynomial arithmetic") {
  const TuttePolynomial a = poly({{1, 0, 1}, {0, 1, 1}});
  CHECK(a * a == poly({{2, 0, 1}, {1, 1, 2}, {0, 2, 1}}));
  CHECK(a.shifted(1, 2) == poly({{2, 2, 1}, {1, 3, 1}}));
  CHECK(a + a == poly({{1, 0, 2}, {0, 1, 2}}));
  CHECK(TuttePolynomial(3, 3) == TuttePolynomial(0, 0));
  CHECK(TuttePolynomial(2, 0).to_string() == "0");
}
