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

#include <functional>

#include "doctest.h"
#include "splitmw/corpus.hpp"
#include "splitmw/graph.hpp"
#include "splitmw/merino_welsh.hpp"
#include "test_support.hpp"

using namespace splitmw;
using namespace splitmw::testing;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::kParse;
}

}  // namespace

TEST_CASE("uniform(1,4) report") {
  const MWReport r = check_mw(uniform(1, 4));
  CHECK(r.t20 == 2);
  CHECK(r.t02 == 14);
  CHECK(r.t11 == 4);
  CHECK(r.all_ok());
}

TEST_CASE("equality case") {
  const MWReport r = check_mw(uniform(1, 2));
  CHECK(r.t20 == r.t11);
  CHECK(r.t02 == r.t11);
  CHECK(r.mult_ok);
}

TEST_CASE("minimal(4,7) agrees across engines and with the oracle") {
  const Matroid m = minimal(4, 7);
  TutteEngine engine;
  const MWReport a = check_mw(m);
  const MWReport b = check_mw(m, &engine);
  const TuttePolynomial t = oracle_tutte(m);
  CHECK(a.t20 == b.t20);
  CHECK(a.t02 == b.t02);
  CHECK(a.t11 == b.t11);
  CHECK(a.t20 == evaluate(t, 2, 0));
  CHECK(a.t02 == evaluate(t, 0, 2));
  CHECK(a.t11 == 13);
  CHECK(a.all_ok());
}

TEST_CASE("loops and coloops are rejected") {
  CHECK(kind_of([] { check_mw(uniform(1, 1)); }) == ErrorKind::kColoopsPresent);
  CHECK(kind_of([] { check_mw(uniform(0, 2)); }) == ErrorKind::kLoopsPresent);
  CHECK(kind_of([] { check_mw(direct_sum(uniform(1, 3), uniform(0, 1))); }) ==
        ErrorKind::kLoopsPresent);
}

TEST_CASE("rank-2 partitions") {
  using P = std::vector<std::vector<int>>;
  CHECK(rank2_partitions(4) == P{{2, 2}, {2, 1, 1}, {1, 1, 1, 1}});
  CHECK(rank2_partitions(2).empty());
  CHECK(rank2_partitions(3) == P{{1, 1, 1}});
  for (const auto& p : rank2_partitions(9)) {
    const Matroid m = rank2_from_partition(p);
    CHECK(m.rank() == 2);
    CHECK(is_clean(m));
  }
}

TEST_CASE("rank-2 census passes through n = 12") {
  for (const Rank2Census& c : verify_rank2_exhaustive(12, 2)) {
    CHECK(c.all_pass);
    CHECK(c.reports.size() == c.class_size_multisets.size());
    for (const MWReport& r : c.reports) CHECK(r.rank == 2);
  }
  const Rank2Census c12 = rank2_census(12);
  CHECK(c12.class_size_multisets.size() == 75);
}

TEST_CASE("rank-2 threshold") {
  CHECK_FALSE(rank2_threshold_check(12));
  CHECK(rank2_threshold_check(13));
  CHECK(rank2_threshold_check(100));
  for (int n = 13; n <= 40; ++n) {
    CHECK(binomial(n, 2) * binomial(n, 2) <= BigInt(1) << n);
  }
}

TEST_CASE("minimal family suite") {
  const auto rows = minimal_family_suite(5, 11);
  CHECK_FALSE(rows.empty());
  for (const auto& row : rows) CHECK(row.pass());
  bool saw = false;
  for (const auto& row : rows) {
    if (row.k == 2 && row.n == 5) {
      saw = true;
      CHECK(row.basis_count == 7);
    }
  }
  CHECK(saw);
}

TEST_CASE("report flags on the corpus") {
  TutteEngine engine;
  for (const auto& entry : standard_corpus(10, 60)) {
    const Matroid& m = entry.matroid;
    if (!is_clean(m)) continue;
    const MWReport r = check_mw(m, &engine);
    const TuttePolynomial t = oracle_tutte(m);
    const BigInt a = evaluate(t, 2, 0), b = evaluate(t, 0, 2), c = evaluate(t, 1, 1);
    CHECK(r.max_ok == (std::max(a, b) >= c));
    CHECK(r.add_ok == (a + b >= 2 * c));
    CHECK(r.mult_ok == (a * b >= c * c));
    if (r.mult_ok) CHECK(r.add_ok);
    if (r.add_ok) CHECK(r.max_ok);
    CHECK(r.t11 <= binomial(m.size(), m.rank()));
    const MWReport d = check_mw(dual(m), &engine);
    CHECK(d.t20 == r.t02);
    CHECK(d.t02 == r.t20);
    CHECK(d.mult_ok == r.mult_ok);
  }
}

TEST_CASE("rank one and corank one") {
  for (int n = 2; n <= 20; ++n) {
    CHECK(check_mw(uniform(1, n)).all_ok());
    CHECK(check_mw(uniform(n - 1, n)).all_ok());
  }
}

TEST_CASE("direct sums of passing matroids pass") {
  const std::vector<Matroid> parts = {uniform(1, 3), minimal(3, 6), uniform(2, 4),
                                      graphic(complete_graph(4))};
  for (const Matroid& a : parts) {
    for (const Matroid& b : parts) {
      if (a.size() + b.size() > 14) continue;
      CHECK(check_mw(direct_sum(a, b)).all_ok());
    }
  }
}

TEST_CASE("report from a hand-built polynomial") {
  TuttePolynomial t(1, 1);
  t.coeff(1, 0) = 1;
  t.coeff(0, 1) = 1;
  const MWReport r = mw_from_polynomial(2, 1, t);
  CHECK(r.t20 == 2);
  CHECK(r.t02 == 2);
  CHECK(r.t11 == 2);
  CHECK(r.all_ok());
}
