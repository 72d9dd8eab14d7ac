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

#include "splitmw/merino_welsh.hpp"

#include <algorithm>
#include <future>
#include <string>

#include "splitmw/flats.hpp"
#include "splitmw/isomorphism.hpp"

namespace splitmw {
namespace {

std::string list_elements(Mask m) {
  std::string out;
  for (Element e : elements_of(m)) {
    if (!out.empty()) out += ',';
    out += std::to_string(e);
  }
  return "{" + out + "}";
}

void partitions_into(int remaining, int max_part, std::vector<int>& current,
                     std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    out.push_back(current);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    current.push_back(part);
    partitions_into(remaining - part, part, current, out);
    current.pop_back();
  }
}

}  // namespace

MWReport mw_from_polynomial(int n, int rank, const TuttePolynomial& t) {
  MWReport r;
  r.n = n;
  r.rank = rank;
  r.t20 = evaluate(t, 2, 0);
  r.t02 = evaluate(t, 0, 2);
  r.t11 = evaluate(t, 1, 1);
  r.max_ok = std::max(r.t20, r.t02) >= r.t11;
  r.add_ok = r.t20 + r.t02 >= 2 * r.t11;
  r.mult_ok = r.t20 * r.t02 >= r.t11 * r.t11;
  return r;
}

MWReport check_mw(const Matroid& m, TutteEngine* engine) {
  if (const Mask l = loops(m)) {
    throw Error(ErrorKind::kLoopsPresent, "loops present: " + list_elements(l));
  }
  if (const Mask c = coloops(m)) {
    throw Error(ErrorKind::kColoopsPresent, "coloops present: " + list_elements(c));
  }
  if (engine) return mw_from_polynomial(m.size(), m.rank(), engine->compute(m));
  return mw_from_polynomial(m.size(), m.rank(), tutte_dc(m));
}

std::vector<std::vector<int>> rank2_partitions(int n) {
  std::vector<std::vector<int>> all;
  std::vector<int> current;
  partitions_into(n, n, current, all);
  std::vector<std::vector<int>> out;
  for (auto& p : all) {
    if (p.size() < 2) continue;
    if (p.size() == 2 && p.back() == 1) continue;  // the other class is a coloop
    out.push_back(std::move(p));
  }
  return out;
}

Rank2Census rank2_census(int n, int threads, TutteEngine* engine) {
  Rank2Census census;
  census.n = n;
  census.class_size_multisets = rank2_partitions(n);
  const auto& parts = census.class_size_multisets;
  census.reports.resize(parts.size());
  TutteEngine local;
  TutteEngine& shared = engine ? *engine : local;
  auto work = [&](std::size_t i) {
    const Matroid m = rank2_from_partition(parts[i]);
    if (coloops(m) != 0) {
      throw Error(ErrorKind::kColoopsPresent,
                  "rank-2 census produced a coloop for n=" + std::to_string(n));
    }
    census.reports[i] = check_mw(m, &shared);
  };
  threads = std::max(1, threads);
  if (threads == 1 || parts.size() < 2) {
    for (std::size_t i = 0; i < parts.size(); ++i) work(i);
  } else {
    std::vector<std::future<void>> jobs;
    for (int t = 0; t < threads; ++t) {
      jobs.push_back(std::async(std::launch::async, [&, t] {
        for (std::size_t i = t; i < parts.size(); i += threads) work(i);
      }));
    }
    for (auto& job : jobs) job.get();
  }
  census.all_pass = std::all_of(census.reports.begin(), census.reports.end(),
                                [](const MWReport& r) { return r.mult_ok; });
  return census;
}

std::vector<Rank2Census> verify_rank2_exhaustive(int n_max, int threads) {
  if (n_max < 2) throw Error(ErrorKind::kOutOfRange, "n_max must be at least 2");
  TutteEngine engine;
  std::vector<Rank2Census> out;
  for (int n = 2; n <= n_max; ++n) out.push_back(rank2_census(n, threads, &engine));
  return out;
}

bool rank2_threshold_check(int n) {
  if (n < 2) throw Error(ErrorKind::kOutOfRange, "threshold check needs n >= 2");
  const BigInt pairs = binomial(n, 2);
  return pairs * pairs <= (BigInt(1) << n);
}

std::vector<MinimalFamilyRow> minimal_family_suite(int k_max, int n_max) {
  if (n_max > 14) throw Error(ErrorKind::kOverLimit, "minimal family suite allows n <= 14");
  TutteEngine engine;
  std::vector<MinimalFamilyRow> rows;
  for (int n = 2; n <= n_max; ++n) {
    for (int k = 1; k <= std::min(k_max, n - 1); ++k) {
      const Matroid m = minimal(k, n);
      MinimalFamilyRow row;
      row.k = k;
      row.n = n;
      row.basis_count = m.basis_count();
      row.bases_ok = row.basis_count == static_cast<std::uint64_t>(k * (n - k) + 1);
      row.dual_ok = are_isomorphic(dual(m), minimal(n - k, n));
      row.connected_ok = is_connected(m);
      row.split_ok = is_split(m) && is_connected_split(m);
      row.mult_ok = is_clean(m) && check_mw(m, &engine).mult_ok;
      rows.push_back(row);
    }
  }
  return rows;
}

}  // namespace splitmw
