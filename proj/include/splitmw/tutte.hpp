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

#include <cstddef>
#include <cstdint>
#include <list>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "splitmw/bigint.hpp"
#include "splitmw/matroid.hpp"

namespace splitmw {

/// Dense bivariate polynomial with coefficient (i, j) on x^i y^j. Shape is
/// (rank + 1) x (corank + 1) for a matroid's Tutte polynomial; arithmetic
/// grows the shape as needed and equality ignores trailing zero rows/columns.
class TuttePolynomial {
 public:
  TuttePolynomial() : TuttePolynomial(0, 0) {}
  TuttePolynomial(int x_degree, int y_degree);

  static TuttePolynomial one() {
    TuttePolynomial p(0, 0);
    p.coeff(0, 0) = 1;
    return p;
  }

  int x_degree() const { return rows_ - 1; }
  int y_degree() const { return cols_ - 1; }

  const BigInt& coeff(int i, int j) const { return data_[index(i, j)]; }
  BigInt& coeff(int i, int j) { return data_[index(i, j)]; }
  /// Zero outside the stored shape.
  BigInt at(int i, int j) const;

  /// Exact value at integer (x, y), with 0^0 = 1.
  BigInt evaluate(const BigInt& x, const BigInt& y) const;

  TuttePolynomial transposed() const;
  /// Multiplies by x^dx y^dy.
  TuttePolynomial shifted(int dx, int dy) const;

  TuttePolynomial& operator+=(const TuttePolynomial& other);
  friend TuttePolynomial operator+(TuttePolynomial a, const TuttePolynomial& b) {
    a += b;
    return a;
  }
  friend TuttePolynomial operator*(const TuttePolynomial& a,
                                   const TuttePolynomial& b);
  friend bool operator==(const TuttePolynomial& a, const TuttePolynomial& b);

  /// Human-readable form such as "x^2 + x + y".
  std::string to_string() const;

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * cols_ + j;
  }
  void resize(int rows, int cols);

  int rows_;
  int cols_;
  std::vector<BigInt> data_;
};

inline BigInt evaluate(const TuttePolynomial& t, long x, long y) {
  return t.evaluate(BigInt(x), BigInt(y));
}

inline constexpr int kSubsetSumLimit = 20;
inline constexpr int kDeletionContractionLimit = 24;

/// Reference engine: sum over all subsets A of
/// (x-1)^(r(E)-r(A)) (y-1)^(|A|-r(A)).
TuttePolynomial tutte_subset_sum(const Matroid& m);

/// Closed form for U(k,n).
TuttePolynomial tutte_uniform(int k, int n);

struct TutteEngineOptions {
  std::size_t memo_capacity_bytes = std::size_t{256} << 20;
  /// Relabel minors by (parallel-class size, basis degree) before keying.
  bool canonicalize = true;
  bool uniform_shortcut = true;
};

struct TutteEngineStats {
  std::uint64_t calls = 0;
  std::uint64_t memo_hits = 0;
  std::uint64_t uniform_leaves = 0;
  std::uint64_t evictions = 0;
  std::size_t memo_entries = 0;
  std::size_t memo_bytes = 0;
};

/// Deletion-contraction with eager loop/coloop stripping, a uniform-minor
/// shortcut and an LRU memo keyed by the relabeled basis family. One engine
/// may be shared between threads; the memo is guarded by a mutex.
class TutteEngine {
 public:
  explicit TutteEngine(TutteEngineOptions options = {});

  TuttePolynomial compute(const Matroid& m);
  TutteEngineStats stats() const;
  void clear();

 private:
  struct Key {
    int n;
    int rank;
    std::vector<Mask> bases;
    friend bool operator==(const Key&, const Key&) = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const;
  };
  using Entry = std::pair<Key, TuttePolynomial>;

  TuttePolynomial compute_clean(const Matroid& m);
  Key make_key(const Matroid& m) const;
  bool lookup(const Key& key, TuttePolynomial* out);
  void store(Key key, const TuttePolynomial& value);
  static std::size_t entry_bytes(const Key& key, const TuttePolynomial& value);

  TutteEngineOptions options_;
  mutable std::mutex mutex_;
  std::list<Entry> lru_;
  std::unordered_map<Key, std::list<Entry>::iterator, KeyHash> index_;
  TutteEngineStats stats_;
};

/// Deletion-contraction with a fresh engine.
TuttePolynomial tutte_dc(const Matroid& m);

/// Element of a largest parallel class, lowest index on ties. Requires a
/// loopless matroid with n >= 1.
Element pick_pivot(const Matroid& m);

}  // namespace splitmw
