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

#include "splitmw/selftest.hpp"

#include <chrono>
#include <functional>
#include <sstream>

#include "splitmw/corpus.hpp"
#include "splitmw/flats.hpp"
#include "splitmw/graph.hpp"
#include "splitmw/io.hpp"
#include "splitmw/merino_welsh.hpp"
#include "splitmw/proof_trace.hpp"
#include "splitmw/tutte.hpp"

namespace splitmw {
namespace {

using Check = std::function<bool(std::ostringstream&)>;

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  Check check;
};

TuttePolynomial rank_one_expected(int n) {
  TuttePolynomial t(1, n - 1);
  t.coeff(1, 0) = 1;
  for (int j = 1; j < n; ++j) t.coeff(0, j) = 1;
  return t;
}

bool criterion_rank_one(std::ostringstream& detail) {
  for (int n = 2; n <= 20; ++n) {
    const TuttePolynomial t = tutte_dc(uniform(1, n));
    if (!(t == rank_one_expected(n))) {
      detail << "U(1," << n << ") polynomial " << t.to_string();
      return false;
    }
    const BigInt two_n = BigInt(1) << n;
    if (evaluate(t, 2, 0) != 2 || evaluate(t, 0, 2) != two_n - 2 || evaluate(t, 1, 1) != n) {
      detail << "U(1," << n << ") evaluations";
      return false;
    }
  }
  detail << "n=2..20 exact";
  return true;
}

bool criterion_minimal_bases(std::ostringstream& detail) {
  TutteEngine engine;
  int checked = 0;
  for (int n = 2; n <= 12; ++n) {
    for (int k = 1; k < n; ++k) {
      const BigInt t11 = evaluate(engine.compute(minimal(k, n)), 1, 1);
      if (t11 != k * (n - k) + 1) {
        detail << "minimal(" << k << "," << n << ") T(1,1)=" << t11;
        return false;
      }
      ++checked;
    }
  }
  detail << checked << " (k,n) pairs";
  return true;
}

bool criterion_rank2_census(std::ostringstream& detail, int threads) {
  const auto censuses = verify_rank2_exhaustive(12, threads);
  std::size_t reports = 0;
  for (const auto& c : censuses) {
    reports += c.reports.size();
    if (!c.all_pass) {
      detail << "census n=" << c.n << " failed";
      return false;
    }
  }
  if (rank2_threshold_check(12) || !rank2_threshold_check(13)) {
    detail << "threshold check wrong at n=12/13";
    return false;
  }
  detail << reports << " census matroids, n<=12 all pass; threshold false@12 true@13";
  return true;
}

bool criterion_rank2_coefficients(std::ostringstream& detail) {
  TutteEngine engine;
  int checked = 0;
  for (const auto& entry : rank2_census_corpus(12)) {
    const int n = entry.matroid.size();
    const TuttePolynomial t = engine.compute(entry.matroid);
    if (t.at(2, 0) != 1 || t.at(0, n - 2) != 1) {
      detail << entry.name << ": " << t.to_string();
      return false;
    }
    ++checked;
  }
  detail << checked << " census matroids";
  return true;
}

bool criterion_duality_and_sums(std::ostringstream& detail) {
  std::vector<CorpusEntry> corpus = minimal_corpus(10);
  for (auto& e : uniform_corpus(10)) corpus.push_back(std::move(e));
  for (auto& g : random_graph_corpus(7, 50, 10, true)) {
    corpus.push_back({"graphic " + g.name, graphic(g.graph)});
  }
  for (auto& e : rank2_census_corpus(10)) corpus.push_back(std::move(e));
  if (corpus.size() < 200) {
    detail << "corpus too small: " << corpus.size();
    return false;
  }
  TutteEngine engine;
  std::vector<TuttePolynomial> polys;
  polys.reserve(corpus.size());
  for (const auto& entry : corpus) {
    const TuttePolynomial t = engine.compute(entry.matroid);
    if (!(engine.compute(dual(entry.matroid)) == t.transposed())) {
      detail << "dual transpose fails for " << entry.name;
      return false;
    }
    polys.push_back(t);
  }
  std::size_t sums = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const std::size_t j = (i * 7 + 3) % corpus.size();
    const Matroid& a = corpus[i].matroid;
    const Matroid& b = corpus[j].matroid;
    if (a.size() + b.size() > 16) continue;
    if (!(engine.compute(direct_sum(a, b)) == polys[i] * polys[j])) {
      detail << "direct sum fails for " << corpus[i].name << " + " << corpus[j].name;
      return false;
    }
    ++sums;
  }
  detail << corpus.size() << " matroids, " << sums << " direct sums";
  return true;
}

bool criterion_engine_equivalence(std::ostringstream& detail) {
  const auto corpus = standard_corpus(14, 60);
  TutteEngine engine;
  for (const auto& entry : corpus) {
    if (!(engine.compute(entry.matroid) == tutte_subset_sum(entry.matroid))) {
      detail << "engines disagree on " << entry.name;
      return false;
    }
  }
  detail << corpus.size() << " matroids with n<=14";
  return true;
}

bool criterion_orientations(std::ostringstream& detail) {
  const auto graphs = bridgeless_graph_corpus(11, 40, 12);
  int checked = 0;
  for (const auto& g : graphs) {
    if (!is_connected(g.graph) || !is_bridgeless(g.graph) || g.graph.edge_count() > 12) continue;
    const TuttePolynomial t = tutte_dc(graphic(g.graph));
    if (evaluate(t, 1, 1) != count_spanning_trees(g.graph) ||
        evaluate(t, 2, 0) != count_acyclic_orientations(g.graph) ||
        evaluate(t, 0, 2) != count_totally_cyclic_orientations(g.graph)) {
      detail << "oracle mismatch on " << g.name << ": " << serialize(graphic(g.graph));
      return false;
    }
    ++checked;
  }
  if (checked < 30) {
    detail << "only " << checked << " graphs";
    return false;
  }
  detail << checked << " connected bridgeless multigraphs";
  return true;
}

std::vector<CorpusEntry> split_trace_corpus() {
  std::vector<CorpusEntry> out = minimal_corpus(10);
  for (int n = 2; n <= 10; ++n) {
    for (int k = 1; k < n; ++k) {
      out.push_back({"uniform(" + std::to_string(k) + "," + std::to_string(n) + ")",
                     uniform(k, n)});
    }
  }
  const Matroid k4 = graphic(complete_graph(4));
  out.push_back({"M(K4)", k4});
  for (auto& e : rank2_census_corpus(10)) out.push_back(std::move(e));
  for (const auto& g : random_graph_corpus(23, 300, 10, false)) {
    const Matroid m = graphic(g.graph);
    if (m.size() >= 1 && is_clean(m) && is_split(m)) out.push_back({"graphic " + g.name, m});
  }
  // Direct sums stay split only while at most one summand is non-uniform.
  std::vector<CorpusEntry> sums;
  const std::vector<std::pair<int, int>> small = {{1, 2}, {2, 4}, {1, 3}, {2, 3}, {3, 4}};
  for (auto [k, n] : small) {
    sums.push_back({"M(K4)+minimal(" + std::to_string(k) + "," + std::to_string(n) + ")",
                    direct_sum(k4, minimal(k, n))});
  }
  sums.push_back({"M(K4)+uniform(2,4)", direct_sum(k4, uniform(2, 4))});
  for (int n1 = 2; n1 <= 8; ++n1) {
    for (int k1 = 1; k1 < n1; ++k1) {
      for (int n2 = 2; n1 + n2 <= 10; ++n2) {
        for (int k2 = 1; k2 < n2; ++k2) {
          sums.push_back({"minimal(" + std::to_string(k1) + "," + std::to_string(n1) +
                              ")+minimal(" + std::to_string(k2) + "," + std::to_string(n2) + ")",
                          direct_sum(minimal(k1, n1), minimal(k2, n2))});
        }
      }
    }
  }
  sums.push_back({"minimal(3,7)+uniform(1,3)", direct_sum(minimal(3, 7), uniform(1, 3))});
  sums.push_back({"uniform(1,2)+uniform(2,3)+minimal(2,4)",
                  direct_sum(direct_sum(uniform(1, 2), uniform(2, 3)), minimal(2, 4))});
  for (auto& e : sums) {
    if (is_split(e.matroid)) out.push_back(std::move(e));
  }
  return out;
}

bool criterion_theorem_trace(std::ostringstream& detail) {
  int traced = 0;
  int failures = 0;
  TutteEngine engine;
  for (const auto& entry : split_trace_corpus()) {
    if (entry.matroid.size() > 10 || !is_split(entry.matroid)) {
      detail << entry.name << " is not a split corpus matroid";
      return false;
    }
    try {
      TraceOptions options;
      options.engine = &engine;
      const ProofTrace t = trace(entry.matroid, options);
      options.dualize_to_lower_rank = true;
      const ProofTrace dualized = trace(entry.matroid, options);
      if (!t.verified || !verify_trace(t) || !dualized.verified || !verify_trace(dualized)) {
        detail << "unverified trace for " << entry.name;
        return false;
      }
    } catch (const ClassificationFailure& ex) {
      ++failures;
      detail << entry.name << ": " << ex.what() << "; ";
    }
    ++traced;
  }

  // Exhaustiveness of the base-case classification on connected split
  // matroids with n <= 9 and no clean pivot.
  std::vector<CorpusEntry> pool = minimal_corpus(9);
  for (auto& e : uniform_corpus(9)) pool.push_back(std::move(e));
  for (auto& e : rank2_census_corpus(9)) pool.push_back(std::move(e));
  for (const auto& g : random_graph_corpus(29, 400, 9, false)) {
    pool.push_back({"graphic " + g.name, graphic(g.graph)});
  }
  int classified = 0;
  for (const auto& entry : pool) {
    const Matroid& m = entry.matroid;
    if (!is_clean(m) || !is_connected(m) || !is_connected_split(m) || !no_clean_pivot(m)) continue;
    try {
      classify_base_case(m);
      ++classified;
    } catch (const ClassificationFailure& ex) {
      ++failures;
      detail << entry.name << ": " << ex.what() << "; ";
    }
  }
  detail << traced << " traces verified, " << classified
         << " base cases classified, failures=" << failures;
  return failures == 0;
}

bool criterion_split_fixtures(std::ostringstream& detail) {
  const CyclicFlatReport minimal_report = cyclic_flats(minimal(4, 7));
  if (!minimal_report.is_split || minimal_report.is_paving || minimal_report.is_copaving) {
    detail << "minimal(4,7) misclassified";
    return false;
  }
  const CyclicFlatReport chain = cyclic_flats(graphic(doubled_four_cycle()));
  const bool chain_ok = !chain.is_split && !chain.is_antichain && chain.nested_pair &&
                        chain.nested_pair->first == mask_of({0, 1}) &&
                        chain.nested_pair->second == mask_of({0, 1, 2, 3});
  if (!chain_ok) {
    detail << "doubled 4-cycle: " << to_json(chain).dump();
    return false;
  }
  detail << "minimal(4,7) split/non-paving/non-copaving; doubled 4-cycle chain {0,1} < {0,1,2,3}";
  return true;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(std::ostream& out, int threads) {
  const std::vector<Criterion> criteria = {
      {1, "rank-1 closed form", 1.0, criterion_rank_one},
      {2, "minimal matroid basis count", 5.0, criterion_minimal_bases},
      {3, "rank-2 computer check and threshold", 30.0,
       [threads](std::ostringstream& d) { return criterion_rank2_census(d, threads); }},
      {4, "rank-2 coefficients [x^2] = [y^(n-2)] = 1", 0.0, criterion_rank2_coefficients},
      {5, "duality transpose and direct-sum product", 60.0, criterion_duality_and_sums},
      {6, "deletion-contraction equals subset sum", 0.0, criterion_engine_equivalence},
      {7, "orientation oracles", 60.0, criterion_orientations},
      {8, "induction trace on split corpus", 300.0, criterion_theorem_trace},
      {9, "split recognition fixtures", 0.0, criterion_split_fixtures},
  };
  std::vector<CriterionResult> results;
  for (const auto& c : criteria) {
    CriterionResult r;
    r.id = c.id;
    r.name = c.name;
    r.limit_seconds = c.limit_seconds;
    std::ostringstream detail;
    const auto start = std::chrono::steady_clock::now();
    try {
      r.pass = c.check(detail);
    } catch (const std::exception& ex) {
      detail << "exception: " << ex.what();
      r.pass = false;
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (r.limit_seconds > 0 && r.seconds >= r.limit_seconds) {
      detail << " [over time limit " << r.limit_seconds << "s]";
      r.pass = false;
    }
    r.detail = detail.str();
    out << (r.pass ? "[PASS] " : "[FAIL] ") << "criterion " << r.id << ": " << r.name
        << " (" << r.seconds << "s";
    if (r.limit_seconds > 0) out << " < " << r.limit_seconds << "s";
    out << ") " << r.detail << "\n";
    out.flush();
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace splitmw
