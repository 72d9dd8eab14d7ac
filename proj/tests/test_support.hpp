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

// Brute-force oracles used only by tests. None of them touch RankTable, the
// Tutte engines or the isomorphism search.
#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "splitmw/bigint.hpp"
#include "splitmw/corpus.hpp"
#include "splitmw/matroid.hpp"
#include "splitmw/tutte.hpp"

namespace splitmw::testing {

inline bool oracle_independent(const Matroid& m, Mask a) {
  return std::any_of(m.bases().begin(), m.bases().end(),
                     [a](Mask b) { return (a & ~b) == 0; });
}

// Greedy: grow an independent subset of a element by element.
inline int oracle_rank(const Matroid& m, Mask a) {
  Mask chosen = 0;
  for (Element e : elements_of(a)) {
    if (oracle_independent(m, chosen | bit(e))) chosen |= bit(e);
  }
  return popcount(chosen);
}

inline bool oracle_exchange(const Matroid& m) {
  for (Mask b1 : m.bases()) {
    for (Mask b2 : m.bases()) {
      for (Element e : elements_of(b1 & ~b2)) {
        bool ok = false;
        for (Element f : elements_of(b2 & ~b1)) {
          ok = ok || m.is_basis((b1 & ~bit(e)) | bit(f));
        }
        if (!ok) return false;
      }
    }
  }
  return true;
}

// Corank-nullity expansion with the greedy rank, coefficients in (i, j).
inline TuttePolynomial oracle_tutte(const Matroid& m) {
  const int n = m.size();
  const int k = m.rank();
  TuttePolynomial out(k, n - k);
  for (Mask a = 0; a < (Mask{1} << n); ++a) {
    const int r = oracle_rank(m, a);
    const int corank = k - r;
    const int nullity = popcount(a) - r;
    for (int i = 0; i <= corank; ++i) {
      for (int j = 0; j <= nullity; ++j) {
        const int sign = ((corank - i + nullity - j) % 2) ? -1 : 1;
        out.coeff(i, j) += binomial(corank, i) * binomial(nullity, j) * sign;
      }
    }
  }
  return out;
}

// Permutation search over all n! relabelings.
inline bool oracle_isomorphic(const Matroid& a, const Matroid& b) {
  if (a.size() != b.size() || a.rank() != b.rank() || a.basis_count() != b.basis_count()) {
    return false;
  }
  std::vector<Element> perm(a.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool all = true;
    for (Mask basis : a.bases()) {
      Mask image = 0;
      for (Element e : elements_of(basis)) image |= bit(perm[e]);
      if (!b.is_basis(image)) {
        all = false;
        break;
      }
    }
    if (all) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Components as the inclusion-minimal nonempty separators S, i.e.
// r(S) + r(E \ S) = r(E).
inline std::vector<Mask> oracle_components(const Matroid& m) {
  const Mask ground = m.ground_set();
  std::vector<Mask> separators;
  for (Mask s = 1; s <= ground; ++s) {
    if (oracle_rank(m, s) + oracle_rank(m, ground & ~s) == m.rank()) separators.push_back(s);
  }
  std::vector<Mask> out;
  for (Mask s : separators) {
    const bool minimal_sep = std::none_of(separators.begin(), separators.end(), [s](Mask t) {
      return t != s && (t & ~s) == 0;
    });
    if (minimal_sep) out.push_back(s);
  }
  std::sort(out.begin(), out.end(),
            [](Mask a, Mask b) { return std::countr_zero(a) < std::countr_zero(b); });
  return out;
}

// A reproducible pool of small matroids for property checks.
inline std::vector<Matroid> property_pool(std::uint64_t seed, int count, int max_edges) {
  std::vector<Matroid> out;
  for (const auto& g : random_graph_corpus(seed, count, max_edges, true)) {
    out.push_back(graphic(g.graph));
  }
  for (int n = 1; n <= 6; ++n) {
    for (int k = 0; k <= n; ++k) out.push_back(uniform(k, n));
    for (int k = 1; k < n; ++k) out.push_back(minimal(k, n));
  }
  out.push_back(direct_sum(minimal(2, 4), uniform(1, 3)));
  out.push_back(direct_sum(uniform(0, 2), uniform(3, 4)));
  return out;
}

inline Mask random_subset(std::mt19937_64& rng, int n) {
  return n == 0 ? 0 : rng() & full_mask(n);
}

}  // namespace splitmw::testing
