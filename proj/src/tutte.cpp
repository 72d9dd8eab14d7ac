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

#include "splitmw/tutte.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "splitmw/rank_table.hpp"

namespace splitmw {

TuttePolynomial::TuttePolynomial(int x_degree, int y_degree)
    : rows_(x_degree + 1), cols_(y_degree + 1),
      data_(static_cast<std::size_t>(rows_) * cols_) {}

BigInt TuttePolynomial::at(int i, int j) const {
  if (i < 0 || j < 0 || i >= rows_ || j >= cols_) return 0;
  return coeff(i, j);
}

void TuttePolynomial::resize(int rows, int cols) {
  if (rows <= rows_ && cols <= cols_) return;
  rows = std::max(rows, rows_);
  cols = std::max(cols, cols_);
  std::vector<BigInt> data(static_cast<std::size_t>(rows) * cols);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) data[static_cast<std::size_t>(i) * cols + j] = coeff(i, j);
  }
  rows_ = rows;
  cols_ = cols;
  data_ = std::move(data);
}

BigInt TuttePolynomial::evaluate(const BigInt& x, const BigInt& y) const {
  std::vector<BigInt> y_powers(cols_);
  BigInt p = 1;
  for (int j = 0; j < cols_; ++j) {
    y_powers[j] = p;
    p *= y;
  }
  BigInt total = 0;
  BigInt x_power = 1;
  for (int i = 0; i < rows_; ++i) {
    BigInt row = 0;
    for (int j = 0; j < cols_; ++j) {
      if (coeff(i, j) != 0) row += coeff(i, j) * y_powers[j];
    }
    total += row * x_power;
    x_power *= x;
  }
  return total;
}

TuttePolynomial TuttePolynomial::transposed() const {
  TuttePolynomial out(cols_ - 1, rows_ - 1);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) out.coeff(j, i) = coeff(i, j);
  }
  return out;
}

TuttePolynomial TuttePolynomial::shifted(int dx, int dy) const {
  TuttePolynomial out(rows_ - 1 + dx, cols_ - 1 + dy);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) out.coeff(i + dx, j + dy) = coeff(i, j);
  }
  return out;
}

TuttePolynomial& TuttePolynomial::operator+=(const TuttePolynomial& other) {
  resize(other.rows_, other.cols_);
  for (int i = 0; i < other.rows_; ++i) {
    for (int j = 0; j < other.cols_; ++j) coeff(i, j) += other.coeff(i, j);
  }
  return *this;
}

TuttePolynomial operator*(const TuttePolynomial& a, const TuttePolynomial& b) {
  TuttePolynomial out(a.x_degree() + b.x_degree(), a.y_degree() + b.y_degree());
  for (int i = 0; i < a.rows_; ++i) {
    for (int j = 0; j < a.cols_; ++j) {
      if (a.coeff(i, j) == 0) continue;
      for (int p = 0; p < b.rows_; ++p) {
        for (int q = 0; q < b.cols_; ++q) {
          out.coeff(i + p, j + q) += a.coeff(i, j) * b.coeff(p, q);
        }
      }
    }
  }
  return out;
}

bool operator==(const TuttePolynomial& a, const TuttePolynomial& b) {
  const int rows = std::max(a.rows_, b.rows_);
  const int cols = std::max(a.cols_, b.cols_);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      if (a.at(i, j) != b.at(i, j)) return false;
    }
  }
  return true;
}

std::string TuttePolynomial::to_string() const {
  std::ostringstream out;
  bool first = true;
  // Highest x power first, then highest y power.
  for (int i = rows_ - 1; i >= 0; --i) {
    for (int j = cols_ - 1; j >= 0; --j) {
      const BigInt& c = coeff(i, j);
      if (c == 0) continue;
      if (!first) out << " + ";
      first = false;
      const bool bare = (i > 0 || j > 0) && c == 1;
      if (!bare) out << c;
      if (i > 0) out << 'x' << (i > 1 ? "^" + std::to_string(i) : "");
      if (j > 0) out << 'y' << (j > 1 ? "^" + std::to_string(j) : "");
    }
  }
  return first ? "0" : out.str();
}

TuttePolynomial tutte_subset_sum(const Matroid& m) {
  const int n = m.size();
  if (n > kSubsetSumLimit) {
    throw Error(ErrorKind::kOverLimit, "subset-sum engine allows n <= " +
                                           std::to_string(kSubsetSumLimit));
  }
  const int k = m.rank();
  const RankTable& r = m.rank_table();
  // counts[c][u]: subsets with corank c and nullity u.
  std::vector<std::vector<std::uint64_t>> counts(k + 1, std::vector<std::uint64_t>(n - k + 1, 0));
  const Mask total = Mask{1} << n;
  for (Mask a = 0; a < total; ++a) {
    const int ra = r(a);
    ++counts[k - ra][popcount(a) - ra];
  }
  // (x-1)^c (y-1)^u expanded with exact binomials.
  TuttePolynomial out(k, n - k);
  for (int c = 0; c <= k; ++c) {
    for (int u = 0; u <= n - k; ++u) {
      if (counts[c][u] == 0) continue;
      const BigInt weight = counts[c][u];
      for (int i = 0; i <= c; ++i) {
        const BigInt xi = binomial(c, i) * (((c - i) % 2) ? -1 : 1);
        for (int j = 0; j <= u; ++j) {
          const BigInt yj = binomial(u, j) * (((u - j) % 2) ? -1 : 1);
          out.coeff(i, j) += weight * xi * yj;
        }
      }
    }
  }
  return out;
}

TuttePolynomial tutte_uniform(int k, int n) {
  if (k < 0 || k > n) {
    throw Error(ErrorKind::kOutOfRange, "uniform parameters out of range");
  }
  TuttePolynomial out(k, n - k);
  if (k == 0 || k == n) {
    out.coeff(k, n - k) = 1;
    return out;
  }
  for (int i = 1; i <= k; ++i) out.coeff(i, 0) = binomial(n - i - 1, k - i);
  for (int j = 1; j <= n - k; ++j) out.coeff(0, j) = binomial(n - j - 1, k - 1);
  return out;
}

Element pick_pivot(const Matroid& m) {
  const int n = m.size();
  std::vector<Mask> spread(n, 0);
  for (Mask b : m.bases()) {
    for (Mask rest = b; rest; rest &= rest - 1) spread[std::countr_zero(rest)] |= b;
  }
  Element best = 0;
  int best_size = -1;
  for (Element e = 0; e < n; ++e) {
    // Non-loop f is parallel to e iff no basis holds both.
    const int size = popcount(m.ground_set() & ~spread[e]) + 1;
    if (size > best_size) {
      best = e;
      best_size = size;
    }
  }
  return best;
}

TutteEngine::TutteEngine(TutteEngineOptions options) : options_(options) {}

std::size_t TutteEngine::KeyHash::operator()(const Key& k) const {
  std::size_t h = std::hash<int>{}(k.n * 131 + k.rank);
  for (Mask b : k.bases) h ^= std::hash<Mask>{}(b) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

std::size_t TutteEngine::entry_bytes(const Key& key, const TuttePolynomial& value) {
  const std::size_t coefficients =
      static_cast<std::size_t>(value.x_degree() + 1) * (value.y_degree() + 1);
  return 128 + key.bases.size() * sizeof(Mask) + coefficients * sizeof(BigInt);
}

TutteEngine::Key TutteEngine::make_key(const Matroid& m) const {
  if (!options_.canonicalize) return {m.size(), m.rank(), m.bases()};
  const int n = m.size();
  std::vector<std::size_t> degree(n, 0);
  std::vector<Mask> spread(n, 0);
  for (Mask b : m.bases()) {
    for (Mask rest = b; rest; rest &= rest - 1) {
      const int e = std::countr_zero(rest);
      ++degree[e];
      spread[e] |= b;
    }
  }
  std::vector<std::pair<int, std::size_t>> signature(n);
  for (Element e = 0; e < n; ++e) {
    signature[e] = {popcount(m.ground_set() & ~spread[e]) + 1, degree[e]};
  }
  std::vector<Element> order(n);
  for (Element e = 0; e < n; ++e) order[e] = e;
  std::stable_sort(order.begin(), order.end(), [&](Element a, Element b) {
    return signature[a] > signature[b];
  });
  std::vector<Element> position(n);
  for (int i = 0; i < n; ++i) position[order[i]] = i;
  Key key{n, m.rank(), {}};
  key.bases.reserve(m.basis_count());
  for (Mask b : m.bases()) {
    Mask out = 0;
    for (Mask rest = b; rest; rest &= rest - 1) out |= bit(position[std::countr_zero(rest)]);
    key.bases.push_back(out);
  }
  std::sort(key.bases.begin(), key.bases.end());
  return key;
}

bool TutteEngine::lookup(const Key& key, TuttePolynomial* out) {
  std::lock_guard lock(mutex_);
  auto it = index_.find(key);
  if (it == index_.end()) return false;
  lru_.splice(lru_.begin(), lru_, it->second);
  *out = it->second->second;
  ++stats_.memo_hits;
  return true;
}

void TutteEngine::store(Key key, const TuttePolynomial& value) {
  std::lock_guard lock(mutex_);
  if (index_.count(key)) return;
  const std::size_t bytes = entry_bytes(key, value);
  if (bytes > options_.memo_capacity_bytes) return;
  lru_.emplace_front(std::move(key), value);
  index_.emplace(lru_.front().first, lru_.begin());
  stats_.memo_bytes += bytes;
  while (stats_.memo_bytes > options_.memo_capacity_bytes && !lru_.empty()) {
    auto& victim = lru_.back();
    stats_.memo_bytes -= entry_bytes(victim.first, victim.second);
    index_.erase(victim.first);
    lru_.pop_back();
    ++stats_.evictions;
  }
  stats_.memo_entries = index_.size();
}

TutteEngineStats TutteEngine::stats() const {
  std::lock_guard lock(mutex_);
  return stats_;
}

void TutteEngine::clear() {
  std::lock_guard lock(mutex_);
  lru_.clear();
  index_.clear();
  stats_.memo_entries = 0;
  stats_.memo_bytes = 0;
}

TuttePolynomial TutteEngine::compute(const Matroid& m) {
  if (m.size() > kDeletionContractionLimit) {
    throw Error(ErrorKind::kOverLimit, "deletion-contraction engine allows n <= " +
                                           std::to_string(kDeletionContractionLimit));
  }
  {
    std::lock_guard lock(mutex_);
    ++stats_.calls;
  }
  const Mask loop_set = loops(m);
  const Mask coloop_set = coloops(m);
  if (!loop_set && !coloop_set) return compute_clean(m);
  // Delete loops and contract coloops in one pass: keep the other elements.
  const Mask keep = m.ground_set() & ~loop_set & ~coloop_set;
  std::vector<Mask> bases;
  bases.reserve(m.basis_count());
  for (Mask b : m.bases()) bases.push_back(squeeze(b, keep));
  const Matroid core = Matroid::from_trusted_bases(popcount(keep),
                                                   m.rank() - popcount(coloop_set),
                                                   std::move(bases));
  return compute_clean(core).shifted(popcount(coloop_set), popcount(loop_set));
}

TuttePolynomial TutteEngine::compute_clean(const Matroid& m) {
  if (m.size() == 0) return TuttePolynomial::one();
  if (options_.uniform_shortcut && is_uniform(m)) {
    std::lock_guard lock(mutex_);
    ++stats_.uniform_leaves;
    return tutte_uniform(m.rank(), m.size());
  }
  Key key = make_key(m);
  TuttePolynomial result;
  if (lookup(key, &result)) return result;
  const Element e = pick_pivot(m);
  result = compute(delete_element(m, e).matroid);
  result += compute(contract_element(m, e).matroid);
  store(std::move(key), result);
  return result;
}

TuttePolynomial tutte_dc(const Matroid& m) {
  TutteEngine engine;
  return engine.compute(m);
}

}  // namespace splitmw
