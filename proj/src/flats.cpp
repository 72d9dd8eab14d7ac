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

#include "splitmw/flats.hpp"

#include <algorithm>
#include <string>

#include "splitmw/rank_table.hpp"

namespace splitmw {
namespace {

void require_limit(const Matroid& m, int limit) {
  if (m.size() > limit || m.size() > kRankTableLimit) {
    throw Error(ErrorKind::kOverLimit, "flat enumeration allows n <= " +
                                           std::to_string(limit) + ", got " +
                                           std::to_string(m.size()));
  }
}

bool is_flat(const RankTable& r, int n, Mask a) {
  const int base = r(a);
  for (Element e = 0; e < n; ++e) {
    if (!contains(a, e) && r(a | bit(e)) == base) return false;
  }
  return true;
}

bool is_cyclic(const RankTable& r, Mask f) {
  const int base = r(f);
  for (Mask rest = f; rest; rest &= rest - 1) {
    if (r(f & ~(rest & -rest)) < base) return false;
  }
  return true;
}

}  // namespace

bool canonical_less(Mask a, Mask b) {
  const int pa = popcount(a);
  const int pb = popcount(b);
  if (pa != pb) return pa < pb;
  // Same size: the set with the smaller first differing element comes first.
  const Mask diff = a ^ b;
  if (!diff) return false;
  return contains(a, std::countr_zero(diff));
}

std::vector<Mask> flats(const Matroid& m, int limit) {
  require_limit(m, limit);
  const RankTable& r = m.rank_table();
  std::vector<Mask> out;
  const Mask count = Mask{1} << m.size();
  for (Mask a = 0; a < count; ++a) {
    if (is_flat(r, m.size(), a)) out.push_back(a);
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

bool is_cyclic_set(const Matroid& m, Mask f) { return is_cyclic(m.rank_table(), f); }

namespace {

// Cyclic flats and the antichain test, without the classification flags.
CyclicFlatReport cyclic_flat_lattice(const Matroid& m, int limit) {
  require_limit(m, limit);
  const RankTable& r = m.rank_table();
  CyclicFlatReport report;
  for (Mask f : flats(m, limit)) {
    if (!is_cyclic(r, f)) continue;
    report.flats.push_back(f);
    report.ranks.push_back(r(f));
    if (f != 0 && f != m.ground_set()) report.proper_flats.push_back(f);
  }
  for (Mask f1 : report.proper_flats) {
    for (Mask f2 : report.proper_flats) {
      if (f1 != f2 && (f1 & ~f2) == 0) {
        report.is_antichain = false;
        report.nested_pair = {f1, f2};
        break;
      }
    }
    if (!report.is_antichain) break;
  }
  return report;
}

}  // namespace

CyclicFlatReport cyclic_flats(const Matroid& m, int limit) {
  CyclicFlatReport report = cyclic_flat_lattice(m, limit);
  report.is_connected_split = report.is_antichain && is_connected(m);
  report.is_split = is_split(m);
  report.is_paving = is_paving(m);
  report.is_copaving = is_copaving(m);
  return report;
}

bool is_connected_split(const Matroid& m) {
  if (!is_connected(m)) return false;
  return cyclic_flat_lattice(m, kFlatEnumerationLimit).is_antichain;
}

bool is_split(const Matroid& m) {
  require_limit(m, kFlatEnumerationLimit);
  int non_uniform = 0;
  for (Mask c : components(m)) {
    const Matroid part = restrict_to(m, c).matroid;
    if (is_uniform(part)) continue;
    if (++non_uniform > 1) return false;
    if (!is_connected_split(part)) return false;
  }
  return true;
}

bool is_paving(const Matroid& m) {
  const int k = m.rank();
  if (k == 0) return true;
  const RankTable& r = m.rank_table();
  const Mask count = Mask{1} << m.size();
  for (Mask a = 0; a < count; ++a) {
    if (popcount(a) == k - 1 && !r.independent(a)) return false;
  }
  return true;
}

bool is_copaving(const Matroid& m) { return is_paving(dual(m)); }

}  // namespace splitmw
