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
#include <vector>

#include "splitmw/bigint.hpp"
#include "splitmw/matroid.hpp"
#include "splitmw/tutte.hpp"

namespace splitmw {

/// The three Merino-Welsh evaluations and verdicts:
///   max:  max(T(2,0), T(0,2)) >= T(1,1)
///   add:  T(2,0) + T(0,2) >= 2 T(1,1)
///   mult: T(2,0) T(0,2) >= T(1,1)^2
struct MWReport {
  int n = 0;
  int rank = 0;
  BigInt t20;
  BigInt t02;
  BigInt t11;
  bool max_ok = false;
  bool add_ok = false;
  bool mult_ok = false;

  bool all_ok() const { return max_ok && add_ok && mult_ok; }
  bool counterexample() const { return !all_ok(); }
};

/// Verdicts from an already computed Tutte polynomial.
MWReport mw_from_polynomial(int n, int rank, const TuttePolynomial& t);

/// Throws kLoopsPresent / kColoopsPresent naming the offending elements.
MWReport check_mw(const Matroid& m, TutteEngine* engine = nullptr);

struct Rank2Census {
  int n = 0;
  std::vector<std::vector<int>> class_size_multisets;
  std::vector<MWReport> reports;
  bool all_pass = true;
};

/// Partitions of n into at least two parts, in decreasing-lex order, minus
/// the coloop pattern (two parts, one of them a singleton).
std::vector<std::vector<int>> rank2_partitions(int n);

Rank2Census rank2_census(int n, int threads = 1, TutteEngine* engine = nullptr);
std::vector<Rank2Census> verify_rank2_exhaustive(int n_max, int threads = 1);

/// C(n,2)^2 <= 2^n.
bool rank2_threshold_check(int n);

struct MinimalFamilyRow {
  int k = 0;
  int n = 0;
  std::uint64_t basis_count = 0;
  bool bases_ok = false;
  bool dual_ok = false;
  bool connected_ok = false;
  bool split_ok = false;
  bool mult_ok = false;
  bool pass() const { return bases_ok && dual_ok && connected_ok && split_ok && mult_ok; }
};

std::vector<MinimalFamilyRow> minimal_family_suite(int k_max, int n_max);

}  // namespace splitmw
