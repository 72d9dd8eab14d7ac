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

#include "splitmw/proof_trace.hpp"

#include <numeric>
#include <string>

#include "splitmw/flats.hpp"
#include "splitmw/io.hpp"
#include "splitmw/isomorphism.hpp"

namespace splitmw {

const char* to_string(ProofRule rule) {
  switch (rule) {
    case ProofRule::kDirectSumSplit: return "DirectSumSplit";
    case ProofRule::kDualize: return "Dualize";
    case ProofRule::kDeleteContract: return "DeleteContract";
    case ProofRule::kBaseRank1: return "BaseRank1";
    case ProofRule::kBaseCorank1: return "BaseCorank1";
    case ProofRule::kBaseRank2: return "BaseRank2";
    case ProofRule::kBaseCorank2: return "BaseCorank2";
    case ProofRule::kBaseMinimal: return "BaseMinimal";
  }
  return "Unknown";
}

namespace {

bool is_base_rule(ProofRule rule) {
  switch (rule) {
    case ProofRule::kDirectSumSplit:
    case ProofRule::kDualize:
    case ProofRule::kDeleteContract:
      return false;
    default:
      return true;
  }
}

std::vector<Element> identity_labels(int n) {
  std::vector<Element> labels(n);
  std::iota(labels.begin(), labels.end(), 0);
  return labels;
}

bool base_rule_holds(const ProofNode& node) {
  const Matroid& m = node.matroid;
  switch (node.rule) {
    case ProofRule::kBaseRank1: return m.rank() == 1;
    case ProofRule::kBaseCorank1: return m.corank() == 1;
    case ProofRule::kBaseRank2: return m.rank() == 2;
    case ProofRule::kBaseCorank2: return m.corank() == 2;
    case ProofRule::kBaseMinimal:
      return node.minimal_n == m.size() && node.minimal_k >= 1 &&
             node.minimal_k < node.minimal_n &&
             are_isomorphic(m, minimal(node.minimal_k, node.minimal_n));
    default: return false;
  }
}

// The sum of child evaluations reproduces the parent's at all three points.
bool evaluations_add_up(const MWReport& parent, const MWReport& del, const MWReport& con) {
  return parent.t20 == del.t20 + con.t20 && parent.t02 == del.t02 + con.t02 &&
         parent.t11 == del.t11 + con.t11;
}

bool direct_sum_shape_holds(const ProofNode& node) {
  if (node.children.size() < 2) return false;
  int size = 0;
  int rank = 0;
  BigInt bases = 1;
  for (const auto& child : node.children) {
    size += child.matroid.size();
    rank += child.matroid.rank();
    bases *= child.matroid.basis_count();
  }
  return size == node.matroid.size() && rank == node.matroid.rank() &&
         bases == node.matroid.basis_count();
}

class Tracer {
 public:
  explicit Tracer(const TraceOptions& options)
      : options_(options), engine_(options.engine ? options.engine : &local_engine_) {}

  ProofNode build(const Matroid& m, std::vector<Element> labels, bool after_dualize) {
    ProofNode node;
    node.matroid = m;
    node.labels = std::move(labels);
    node.mw = check_mw(m, engine_);
    if (!is_split(m)) {
      throw ClassificationFailure(ErrorKind::kNotSplit,
                                  "minor is not split: " + serialize(m), m);
    }

    if (!is_connected(m)) {
      node.rule = ProofRule::kDirectSumSplit;
      for (Mask part : components(m)) {
        Minor piece = restrict_to(m, part);
        node.children.push_back(build(piece.matroid, std::move(piece.labels), false));
      }
      node.check_passed = direct_sum_shape_holds(node);
    } else if (options_.dualize_to_lower_rank && !after_dualize && m.corank() < m.rank()) {
      node.rule = ProofRule::kDualize;
      node.children.push_back(build(dual(m), identity_labels(m.size()), true));
      node.check_passed = node.children[0].matroid == dual(m);
    } else if (m.rank() <= 2 || m.corank() <= 2) {
      node.rule = m.rank() == 1     ? ProofRule::kBaseRank1
                  : m.corank() == 1 ? ProofRule::kBaseCorank1
                  : m.rank() == 2   ? ProofRule::kBaseRank2
                                    : ProofRule::kBaseCorank2;
      node.check_passed = base_rule_holds(node);
    } else if (const auto k = minimal_parameter(m)) {
      node.rule = ProofRule::kBaseMinimal;
      node.minimal_k = *k;
      node.minimal_n = m.size();
      node.check_passed = true;
    } else if (const auto e = first_clean_pivot(m)) {
      node.rule = ProofRule::kDeleteContract;
      node.pivot = *e;
      Minor del = delete_element(m, *e);
      Minor con = contract_element(m, *e);
      node.children.push_back(build(del.matroid, std::move(del.labels), false));
      node.children.push_back(build(con.matroid, std::move(con.labels), false));
      node.check_passed =
          evaluations_add_up(node.mw, node.children[0].mw, node.children[1].mw);
    } else {
      throw ClassificationFailure(
          ErrorKind::kClassificationFailure,
          "connected split matroid without clean pivot is neither rank/corank <= 2 "
          "nor minimal: " + serialize(m),
          m);
    }
    node.check_passed = node.check_passed && node.mw.mult_ok;
    return node;
  }

 private:
  TraceOptions options_;
  TutteEngine local_engine_;
  TutteEngine* engine_;
};

bool all_checks_passed(const ProofNode& node) {
  if (!node.check_passed) return false;
  if (node.children.empty() && !is_base_rule(node.rule)) return false;
  for (const auto& child : node.children) {
    if (!all_checks_passed(child)) return false;
  }
  return true;
}

bool recheck(const ProofNode& node, bool parent_was_dualize) {
  const Matroid& m = node.matroid;
  if (!is_clean(m) || m.size() == 0) return false;
  const MWReport fresh = mw_from_polynomial(m.size(), m.rank(), tutte_subset_sum(m));
  if (!fresh.mult_ok || fresh.t11 != node.mw.t11 || fresh.t20 != node.mw.t20 ||
      fresh.t02 != node.mw.t02) {
    return false;
  }
  switch (node.rule) {
    case ProofRule::kDirectSumSplit: {
      Mask covered = 0;
      for (const auto& child : node.children) {
        const Mask part = mask_of(child.labels);
        if (covered & part) return false;
        covered |= part;
        if (!(restrict_to(m, part).matroid == child.matroid)) return false;
        if (child.matroid.size() >= m.size()) return false;
      }
      if (covered != m.ground_set() || !direct_sum_shape_holds(node)) return false;
      break;
    }
    case ProofRule::kDualize:
      if (parent_was_dualize || node.children.size() != 1 ||
          !(node.children[0].matroid == dual(m))) {
        return false;
      }
      break;
    case ProofRule::kDeleteContract: {
      if (node.children.size() != 2 || node.pivot < 0 || node.pivot >= m.size()) return false;
      const Matroid del = delete_element(m, node.pivot).matroid;
      const Matroid con = contract_element(m, node.pivot).matroid;
      if (!(node.children[0].matroid == del) || !(node.children[1].matroid == con)) return false;
      if (!is_clean(del) || !is_clean(con)) return false;
      break;
    }
    default:
      if (!node.children.empty() || !base_rule_holds(node)) return false;
      return true;
  }
  for (const auto& child : node.children) {
    if (!recheck(child, node.rule == ProofRule::kDualize)) return false;
  }
  return true;
}

}  // namespace

ProofTrace trace(const Matroid& m, const TraceOptions& options) {
  if (m.size() == 0) {
    throw Error(ErrorKind::kNotCleanInput, "trace needs a non-empty ground set");
  }
  if (const Mask l = loops(m)) {
    throw Error(ErrorKind::kNotCleanInput, "input has loops");
  }
  if (const Mask c = coloops(m)) {
    throw Error(ErrorKind::kNotCleanInput, "input has coloops");
  }
  if (!is_split(m)) throw Error(ErrorKind::kNotSplit, "input is not a split matroid");
  Tracer tracer(options);
  ProofTrace out;
  out.root = tracer.build(m, identity_labels(m.size()), false);
  out.verified = all_checks_passed(out.root);
  return out;
}

bool verify_trace(const ProofTrace& t) { return t.verified && recheck(t.root, false); }

std::optional<Element> first_clean_pivot(const Matroid& m) {
  for (Element e = 0; e < m.size(); ++e) {
    if (is_clean(delete_element(m, e).matroid) && is_clean(contract_element(m, e).matroid)) {
      return e;
    }
  }
  return std::nullopt;
}

bool no_clean_pivot(const Matroid& m) { return !first_clean_pivot(m).has_value(); }

std::optional<int> minimal_parameter(const Matroid& m) {
  const int n = m.size();
  const int k = m.rank();
  if (k < 1 || k > n - 1) return std::nullopt;
  if (m.basis_count() != static_cast<std::size_t>(k * (n - k) + 1)) return std::nullopt;
  // With k >= 2 and n - k >= 2 the parallel class is the only proper cyclic flat.
  if (k >= 2 && n - k >= 2) {
    const CyclicFlatReport report = cyclic_flats(m);
    if (report.proper_flats.size() != 1) return std::nullopt;
    const Mask p = report.proper_flats.front();
    if (popcount(p) != n - k || rank_of(m, p) != 1) return std::nullopt;
  }
  if (!are_isomorphic(m, minimal(k, n))) return std::nullopt;
  return k;
}

BaseCaseClassification classify_base_case(const Matroid& m) {
  if (!is_clean(m) || !is_connected(m) || !is_connected_split(m)) {
    throw Error(ErrorKind::kPreconditionViolated,
                "base-case classification needs a connected split matroid "
                "without loops or coloops");
  }
  if (!no_clean_pivot(m)) {
    throw Error(ErrorKind::kPreconditionViolated,
                "base-case classification needs every element to leave a loop "
                "or coloop in its deletion or contraction");
  }
  const bool low = m.rank() <= 2 || m.corank() <= 2;
  const auto k = minimal_parameter(m);
  if (low && k) return {BaseCase::kBoth, *k, m.size()};
  if (low) return {BaseCase::kRankOrCorankAtMost2, 0, m.size()};
  if (k) return {BaseCase::kMinimal, *k, m.size()};
  throw ClassificationFailure(ErrorKind::kExhaustivenessFailure,
                              "neither rank/corank <= 2 nor minimal: " + serialize(m), m);
}

std::size_t node_count(const ProofNode& node) {
  std::size_t total = 1;
  for (const auto& child : node.children) total += node_count(child);
  return total;
}

}  // namespace splitmw
