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

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace splitmw {

/// Ground-set elements are indexed 0..n-1.
using Element = int;

/// A subset of the ground set, bit i set iff element i is present.
using Mask = std::uint64_t;

inline constexpr int kMaxElements = 64;

enum class ErrorKind {
  kEmptyBases,
  kWrongBasisSize,
  kExchangeViolation,
  kOutOfRange,
  kOverLimit,
  kLoopsPresent,
  kColoopsPresent,
  kNotSplit,
  kNotCleanInput,
  kClassificationFailure,
  kExhaustivenessFailure,
  kPreconditionViolated,
  kEngineMismatch,
  kParse,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised by Matroid::from_bases when the exchange axiom fails. The witness is
/// a pair of bases and an element of `first \ second` that has no exchange
/// partner in `second \ first`.
class ExchangeViolation : public Error {
 public:
  ExchangeViolation(Mask first, Mask second, Element removed);
  Mask first() const { return first_; }
  Mask second() const { return second_; }
  Element removed() const { return removed_; }

 private:
  Mask first_;
  Mask second_;
  Element removed_;
};

inline Mask bit(Element e) { return Mask{1} << e; }
inline Mask full_mask(int n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }
inline int popcount(Mask m) { return std::popcount(m); }
inline bool contains(Mask m, Element e) { return (m >> e) & 1U; }

Mask mask_of(std::initializer_list<Element> elements);
Mask mask_of(std::span<const Element> elements);
std::vector<Element> elements_of(Mask m);

/// Keeps the bits of `m` selected by `keep` and packs them to the bottom,
/// preserving order (a software PEXT).
Mask squeeze(Mask m, Mask keep);

/// Inverse of squeeze: spreads the low bits of `packed` onto the positions
/// set in `positions`.
Mask expand(Mask packed, Mask positions);

class RankTable;

/// A matroid given by its family of bases. Immutable once built; copies share
/// a lazily built rank table.
class Matroid {
 public:
  /// Validates sizes, range and the basis exchange axiom.
  static Matroid from_bases(int n, int rank, std::span<const Mask> bases);
  static Matroid from_bases(int n, int rank,
                            const std::vector<std::vector<Element>>& bases);

  /// Skips the exchange check. For constructions that are matroids by
  /// theory (uniform, minors, duals, sums, graphic).
  static Matroid from_trusted_bases(int n, int rank, std::vector<Mask> bases);

  int size() const { return n_; }
  int rank() const { return rank_; }
  int corank() const { return n_ - rank_; }
  Mask ground_set() const { return full_mask(n_); }

  /// Sorted ascending, deduplicated.
  const std::vector<Mask>& bases() const { return bases_; }
  std::size_t basis_count() const { return bases_.size(); }
  bool is_basis(Mask b) const;

  /// Rank of every subset; built on first use. Requires size() <= 24.
  const RankTable& rank_table() const;

  friend bool operator==(const Matroid& a, const Matroid& b) {
    return a.n_ == b.n_ && a.rank_ == b.rank_ && a.bases_ == b.bases_;
  }

 private:
  struct Cache;
  Matroid(int n, int rank, std::vector<Mask> bases);

  int n_ = 0;
  int rank_ = 0;
  std::vector<Mask> bases_;
  std::shared_ptr<Cache> cache_;
};

/// Brute-force exchange axiom check over all ordered basis pairs. Returns
/// false and fills the witness when it fails.
bool satisfies_basis_exchange(std::span<const Mask> sorted_bases,
                              Mask* first = nullptr, Mask* second = nullptr,
                              Element* removed = nullptr);

/// A minor or restriction on a reindexed ground set. labels[i] is the element
/// of the parent matroid that became element i.
struct Minor {
  Matroid matroid;
  std::vector<Element> labels;
};

Matroid uniform(int k, int n);

/// The minimal matroid T(k,n): a (k+1)-cycle with one edge replaced by n-k
/// parallel copies. Elements 0..k-1 are the path, k..n-1 the parallel class.
Matroid minimal(int k, int n);

/// Rank-2 matroid with parallel classes of the given sizes (consecutive
/// element blocks). Loopless by construction.
Matroid rank2_from_partition(std::span<const int> class_sizes);

/// max |B & a| over bases B.
int rank_of(const Matroid& m, Mask a);

/// { e : rank(a + e) == rank(a) }.
Mask closure(const Matroid& m, Mask a);

Minor delete_element(const Matroid& m, Element e);
Minor contract_element(const Matroid& m, Element e);

/// Restriction m|a on the elements of a, reindexed in order.
Minor restrict_to(const Matroid& m, Mask a);

Matroid dual(const Matroid& m);
Matroid direct_sum(const Matroid& first, const Matroid& second);

Mask loops(const Matroid& m);
Mask coloops(const Matroid& m);
inline bool is_clean(const Matroid& m) { return loops(m) == 0 && coloops(m) == 0; }

/// All circuits (minimal dependent sets), by a subset sweep over the rank table.
std::vector<Mask> circuits(const Matroid& m);

/// Connected components as a partition of E, sorted by lowest element.
/// Loops and coloops are singleton components.
std::vector<Mask> components(const Matroid& m);
bool is_connected(const Matroid& m);

/// True iff the bases are exactly all rank-subsets of E.
bool is_uniform(const Matroid& m);

}  // namespace splitmw
