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

#include "splitmw/matroid.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>

#include "splitmw/bigint.hpp"
#include "splitmw/rank_table.hpp"

namespace splitmw {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kEmptyBases: return "EmptyBases";
    case ErrorKind::kWrongBasisSize: return "WrongBasisSize";
    case ErrorKind::kExchangeViolation: return "ExchangeViolation";
    case ErrorKind::kOutOfRange: return "OutOfRange";
    case ErrorKind::kOverLimit: return "OverLimit";
    case ErrorKind::kLoopsPresent: return "LoopsPresent";
    case ErrorKind::kColoopsPresent: return "ColoopsPresent";
    case ErrorKind::kNotSplit: return "NotSplit";
    case ErrorKind::kNotCleanInput: return "NotCleanInput";
    case ErrorKind::kClassificationFailure: return "ClassificationFailure";
    case ErrorKind::kExhaustivenessFailure: return "ExhaustivenessFailure";
    case ErrorKind::kPreconditionViolated: return "PreconditionViolated";
    case ErrorKind::kEngineMismatch: return "EngineMismatch";
    case ErrorKind::kParse: return "Parse";
  }
  return "Unknown";
}

namespace {

std::string describe(Mask m) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (Element e : elements_of(m)) {
    if (!first) out << ',';
    out << e;
    first = false;
  }
  out << '}';
  return out.str();
}

void require_element(const Matroid& m, Element e) {
  if (e < 0 || e >= m.size()) {
    throw Error(ErrorKind::kOutOfRange, "element " + std::to_string(e) +
                                            " outside ground set of size " +
                                            std::to_string(m.size()));
  }
}

void require_subset(const Matroid& m, Mask a) {
  if (a & ~m.ground_set()) {
    throw Error(ErrorKind::kOutOfRange,
                "subset " + describe(a) + " not inside ground set of size " +
                    std::to_string(m.size()));
  }
}

// Gosper's hack: next mask with the same popcount.
Mask next_combination(Mask x) {
  const Mask c = x & -x;
  const Mask r = x + c;
  return (((r ^ x) >> 2) / c) | r;
}

}  // namespace

ExchangeViolation::ExchangeViolation(Mask first, Mask second, Element removed)
    : Error(ErrorKind::kExchangeViolation,
            "basis exchange fails: B1=" + describe(first) + " B2=" +
                describe(second) + " e=" + std::to_string(removed)),
      first_(first),
      second_(second),
      removed_(removed) {}

Mask mask_of(std::initializer_list<Element> elements) {
  return mask_of(std::span<const Element>(elements.begin(), elements.size()));
}

Mask mask_of(std::span<const Element> elements) {
  Mask m = 0;
  for (Element e : elements) {
    if (e < 0 || e >= kMaxElements) {
      throw Error(ErrorKind::kOutOfRange, "element " + std::to_string(e));
    }
    m |= bit(e);
  }
  return m;
}

std::vector<Element> elements_of(Mask m) {
  std::vector<Element> out;
  out.reserve(popcount(m));
  while (m) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

Mask squeeze(Mask m, Mask keep) {
  Mask out = 0;
  int pos = 0;
  for (Mask rest = keep; rest; rest &= rest - 1) {
    const Mask low = rest & -rest;
    if (m & low) out |= Mask{1} << pos;
    ++pos;
  }
  return out;
}

Mask expand(Mask packed, Mask positions) {
  Mask out = 0;
  int pos = 0;
  for (Mask rest = positions; rest; rest &= rest - 1) {
    if ((packed >> pos) & 1U) out |= rest & -rest;
    ++pos;
  }
  return out;
}

struct Matroid::Cache {
  std::once_flag once;
  std::unique_ptr<RankTable> table;
};

Matroid::Matroid(int n, int rank, std::vector<Mask> bases)
    : n_(n), rank_(rank), bases_(std::move(bases)), cache_(std::make_shared<Cache>()) {
  std::sort(bases_.begin(), bases_.end());
  bases_.erase(std::unique(bases_.begin(), bases_.end()), bases_.end());
}

Matroid Matroid::from_trusted_bases(int n, int rank, std::vector<Mask> bases) {
  return Matroid(n, rank, std::move(bases));
}

Matroid Matroid::from_bases(int n, int rank, std::span<const Mask> bases) {
  if (n < 0 || n > kMaxElements) {
    throw Error(ErrorKind::kOverLimit, "ground set size " + std::to_string(n) +
                                           " outside [0, 64]");
  }
  if (rank < 0 || rank > n) {
    throw Error(ErrorKind::kOutOfRange, "rank " + std::to_string(rank) +
                                            " outside [0, " + std::to_string(n) + "]");
  }
  if (bases.empty()) throw Error(ErrorKind::kEmptyBases, "no bases given");
  for (Mask b : bases) {
    if (b & ~full_mask(n)) {
      throw Error(ErrorKind::kOutOfRange, "basis " + describe(b) +
                                              " not inside ground set of size " +
                                              std::to_string(n));
    }
    if (popcount(b) != rank) {
      throw Error(ErrorKind::kWrongBasisSize,
                  "basis " + describe(b) + " has size " +
                      std::to_string(popcount(b)) + ", expected " +
                      std::to_string(rank));
    }
  }
  Matroid m(n, rank, std::vector<Mask>(bases.begin(), bases.end()));
  Mask first = 0, second = 0;
  Element removed = -1;
  if (!satisfies_basis_exchange(m.bases_, &first, &second, &removed)) {
    throw ExchangeViolation(first, second, removed);
  }
  return m;
}

Matroid Matroid::from_bases(int n, int rank,
                            const std::vector<std::vector<Element>>& bases) {
  std::vector<Mask> masks;
  masks.reserve(bases.size());
  for (const auto& b : bases) {
    for (Element e : b) {
      if (e < 0 || e >= n) {
        throw Error(ErrorKind::kOutOfRange, "element " + std::to_string(e) +
                                                " outside ground set of size " +
                                                std::to_string(n));
      }
    }
    const Mask mask = mask_of(b);
    if (popcount(mask) != static_cast<int>(b.size())) {
      throw Error(ErrorKind::kWrongBasisSize, "basis lists an element twice");
    }
    masks.push_back(mask);
  }
  return from_bases(n, rank, masks);
}

bool Matroid::is_basis(Mask b) const {
  return std::binary_search(bases_.begin(), bases_.end(), b);
}

const RankTable& Matroid::rank_table() const {
  std::call_once(cache_->once,
                 [this] { cache_->table = std::make_unique<RankTable>(*this); });
  return *cache_->table;
}

bool satisfies_basis_exchange(std::span<const Mask> sorted_bases, Mask* first,
                              Mask* second, Element* removed) {
  for (Mask b1 : sorted_bases) {
    for (Mask b2 : sorted_bases) {
      if (b1 == b2) continue;
      const Mask gain = b2 & ~b1;
      for (Mask out = b1 & ~b2; out; out &= out - 1) {
        const Mask e = out & -out;
        bool found = false;
        for (Mask in = gain; in && !found; in &= in - 1) {
          const Mask candidate = (b1 & ~e) | (in & -in);
          found = std::binary_search(sorted_bases.begin(), sorted_bases.end(), candidate);
        }
        if (!found) {
          if (first) *first = b1;
          if (second) *second = b2;
          if (removed) *removed = std::countr_zero(e);
          return false;
        }
      }
    }
  }
  return true;
}

Matroid uniform(int k, int n) {
  if (n < 0 || n >= kMaxElements || k < 0 || k > n) {
    throw Error(ErrorKind::kOutOfRange, "uniform(" + std::to_string(k) + "," +
                                            std::to_string(n) + ") needs 0 <= k <= n < 64");
  }
  std::vector<Mask> bases;
  bases.reserve(binomial_u64(n, k));
  if (k == 0) {
    bases.push_back(0);
  } else {
    const Mask limit = Mask{1} << n;
    for (Mask b = full_mask(k); b < limit; b = next_combination(b)) bases.push_back(b);
  }
  return Matroid::from_trusted_bases(n, k, std::move(bases));
}

Matroid minimal(int k, int n) {
  if (k < 1 || k > n - 1 || n >= kMaxElements) {
    throw Error(ErrorKind::kOutOfRange, "minimal(" + std::to_string(k) + "," +
                                            std::to_string(n) + ") needs 1 <= k <= n-1");
  }
  const Mask path = full_mask(k);
  std::vector<Mask> bases{path};
  for (Element i = 0; i < k; ++i) {
    for (Element p = k; p < n; ++p) bases.push_back((path & ~bit(i)) | bit(p));
  }
  return Matroid::from_trusted_bases(n, k, std::move(bases));
}

Matroid rank2_from_partition(std::span<const int> class_sizes) {
  if (class_sizes.size() < 2) {
    throw Error(ErrorKind::kOutOfRange, "rank-2 partition needs at least 2 classes");
  }
  std::vector<Mask> classes;
  int n = 0;
  for (int size : class_sizes) {
    if (size < 1) throw Error(ErrorKind::kOutOfRange, "class sizes must be >= 1");
    if (n + size >= kMaxElements) throw Error(ErrorKind::kOverLimit, "too many elements");
    classes.push_back(full_mask(size) << n);
    n += size;
  }
  std::vector<Mask> bases;
  for (std::size_t a = 0; a < classes.size(); ++a) {
    for (std::size_t b = a + 1; b < classes.size(); ++b) {
      for (Element e : elements_of(classes[a])) {
        for (Element f : elements_of(classes[b])) bases.push_back(bit(e) | bit(f));
      }
    }
  }
  return Matroid::from_trusted_bases(n, 2, std::move(bases));
}

int rank_of(const Matroid& m, Mask a) {
  require_subset(m, a);
  int best = 0;
  for (Mask b : m.bases()) {
    best = std::max(best, popcount(b & a));
    if (best == m.rank()) break;
  }
  return best;
}

Mask closure(const Matroid& m, Mask a) {
  require_subset(m, a);
  if (m.size() <= kRankTableLimit) {
    const RankTable& r = m.rank_table();
    const int base = r(a);
    Mask out = a;
    for (Element e = 0; e < m.size(); ++e) {
      if (!contains(a, e) && r(a | bit(e)) == base) out |= bit(e);
    }
    return out;
  }
  const int base = rank_of(m, a);
  Mask out = a;
  for (Element e = 0; e < m.size(); ++e) {
    if (!contains(a, e) && rank_of(m, a | bit(e)) == base) out |= bit(e);
  }
  return out;
}

namespace {

std::vector<Element> labels_for(Mask keep) { return elements_of(keep); }

}  // namespace

Minor delete_element(const Matroid& m, Element e) {
  require_element(m, e);
  const Mask keep = m.ground_set() & ~bit(e);
  const bool is_coloop = contains(coloops(m), e);
  std::vector<Mask> bases;
  for (Mask b : m.bases()) {
    if (is_coloop || !contains(b, e)) bases.push_back(squeeze(b, keep));
  }
  const int rank = is_coloop ? m.rank() - 1 : m.rank();
  return {Matroid::from_trusted_bases(m.size() - 1, rank, std::move(bases)),
          labels_for(keep)};
}

Minor contract_element(const Matroid& m, Element e) {
  require_element(m, e);
  if (contains(loops(m), e)) return delete_element(m, e);
  const Mask keep = m.ground_set() & ~bit(e);
  std::vector<Mask> bases;
  for (Mask b : m.bases()) {
    if (contains(b, e)) bases.push_back(squeeze(b, keep));
  }
  return {Matroid::from_trusted_bases(m.size() - 1, m.rank() - 1, std::move(bases)),
          labels_for(keep)};
}

Minor restrict_to(const Matroid& m, Mask a) {
  require_subset(m, a);
  int best = 0;
  for (Mask b : m.bases()) best = std::max(best, popcount(b & a));
  std::vector<Mask> bases;
  for (Mask b : m.bases()) {
    if (popcount(b & a) == best) bases.push_back(squeeze(b & a, a));
  }
  return {Matroid::from_trusted_bases(popcount(a), best, std::move(bases)),
          labels_for(a)};
}

Matroid dual(const Matroid& m) {
  std::vector<Mask> bases;
  bases.reserve(m.basis_count());
  for (Mask b : m.bases()) bases.push_back(m.ground_set() & ~b);
  return Matroid::from_trusted_bases(m.size(), m.corank(), std::move(bases));
}

Matroid direct_sum(const Matroid& first, const Matroid& second) {
  const int n = first.size() + second.size();
  if (n > kMaxElements) {
    throw Error(ErrorKind::kOverLimit, "direct sum exceeds 64 elements");
  }
  std::vector<Mask> bases;
  bases.reserve(first.basis_count() * second.basis_count());
  for (Mask b1 : first.bases()) {
    for (Mask b2 : second.bases()) bases.push_back(b1 | (b2 << first.size()));
  }
  return Matroid::from_trusted_bases(n, first.rank() + second.rank(), std::move(bases));
}

Mask loops(const Matroid& m) {
  Mask used = 0;
  for (Mask b : m.bases()) used |= b;
  return m.ground_set() & ~used;
}

Mask coloops(const Matroid& m) {
  Mask common = m.ground_set();
  for (Mask b : m.bases()) common &= b;
  return common;
}

std::vector<Mask> circuits(const Matroid& m) {
  const RankTable& r = m.rank_table();
  std::vector<Mask> out;
  const Mask count = Mask{1} << m.size();
  for (Mask a = 1; a < count; ++a) {
    const int size = popcount(a);
    if (r(a) != size - 1) continue;
    bool minimal_dependent = true;
    for (Mask rest = a; rest && minimal_dependent; rest &= rest - 1) {
      minimal_dependent = r.independent(a & ~(rest & -rest));
    }
    if (minimal_dependent) out.push_back(a);
  }
  return out;
}

std::vector<Mask> components(const Matroid& m) {
  const int n = m.size();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (Mask c : circuits(m)) {
    const int root = find(std::countr_zero(c));
    for (Element e : elements_of(c)) parent[find(e)] = root;
  }
  std::vector<Mask> by_root(n, 0);
  for (Element e = 0; e < n; ++e) by_root[find(e)] |= bit(e);
  std::vector<Mask> out;
  for (Mask c : by_root) {
    if (c) out.push_back(c);
  }
  std::sort(out.begin(), out.end(),
            [](Mask a, Mask b) { return std::countr_zero(a) < std::countr_zero(b); });
  return out;
}

bool is_connected(const Matroid& m) {
  return m.size() >= 1 && components(m).size() == 1;
}

bool is_uniform(const Matroid& m) {
  return m.basis_count() == binomial_u64(m.size(), m.rank());
}

}  // namespace splitmw
