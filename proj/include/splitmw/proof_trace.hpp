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

#include <optional>
#include <string>
#include <vector>

#include "splitmw/matroid.hpp"
#include "splitmw/merino_welsh.hpp"
#include "splitmw/tutte.hpp"

namespace splitmw {

enum class ProofRule {
  kDirectSumSplit,
  kDualize,
  kDeleteContract,
  kBaseRank1,
  kBaseCorank1,
  kBaseRank2,
  kBaseCorank2,
  kBaseMinimal,
};

const char* to_string(ProofRule rule);

/// One step of the induction. `matroid` is the node's own matroid on its
/// reindexed ground set; `labels` maps its elements back to the parent's.
struct ProofNode {
  Matroid matroid = uniform(0, 0);
  std::vector<Element> labels;
  ProofRule rule = ProofRule::kBaseRank1;
  Element pivot = -1;   // kDeleteContract; children are {deletion, contraction}
  int minimal_k = 0;    // kBaseMinimal
  int minimal_n = 0;
  MWReport mw;
  bool check_passed = false;
  std::vector<ProofNode> children;
};

struct ProofTrace {
  ProofNode root;
  bool verified = false;
};

/// Raised when a connected split matroid has no clean pivot yet is neither
/// rank/corank <= 2 nor minimal. Carries the offending matroid.
class ClassificationFailure : public Error {
 public:
  ClassificationFailure(ErrorKind kind, const std::string& what, Matroid m)
      : Error(kind, what), matroid_(std::move(m)) {}
  const Matroid& matroid() const { return matroid_; }

 private:
  Matroid matroid_;
};

struct TraceOptions {
  /// Emit a Dualize step before the base-case checks whenever corank < rank.
  bool dualize_to_lower_rank = false;
  TutteEngine* engine = nullptr;
};

/// Replays the strong induction on |E| for a loopless, coloopless split
/// matroid: components first, then rank/corank <= 2 and minimal base cases,
/// otherwise delete/contract the smallest-index element whose minors are both
/// clean.
ProofTrace trace(const Matroid& m, const TraceOptions& options = {});

/// Re-checks a finished trace from scratch with the subset-sum engine.
bool verify_trace(const ProofTrace& t);

/// True iff for every e, the deletion or the contraction has a loop or coloop.
bool no_clean_pivot(const Matroid& m);

/// Smallest e with both minors loopless and coloopless.
std::optional<Element> first_clean_pivot(const Matroid& m);

/// Returns k when m is isomorphic to minimal(k, |E|). Checks basis count and
/// the single-proper-cyclic-flat certificate before the isomorphism search.
std::optional<int> minimal_parameter(const Matroid& m);

enum class BaseCase { kRankOrCorankAtMost2, kMinimal, kBoth };

struct BaseCaseClassification {
  BaseCase kind;
  int k = 0;
  int n = 0;
};

/// Classifies a connected split clean matroid without clean pivots. Throws
/// kPreconditionViolated when the input does not meet that description and
/// kExhaustivenessFailure if neither case applies.
BaseCaseClassification classify_base_case(const Matroid& m);

std::size_t node_count(const ProofNode& node);

}  // namespace splitmw
