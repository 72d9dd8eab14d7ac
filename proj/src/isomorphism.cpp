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

#include "splitmw/isomorphism.hpp"

#include <algorithm>
#include <utility>

#include "splitmw/rank_table.hpp"
#include "splitmw/tutte.hpp"

namespace splitmw {
namespace {

// (parallel-class size, number of bases containing e); loops get class size
// -(number of loops) so they never pair with non-loops.
using Signature = std::pair<int, std::size_t>;

std::vector<Signature> signatures(const Matroid& m) {
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
  const Mask loop_set = loops(m);
  std::vector<Signature> out(n);
  for (Element e = 0; e < n; ++e) {
    if (contains(loop_set, e)) {
      out[e] = {-popcount(loop_set), 0};
    } else {
      const Mask parallel = m.ground_set() & ~spread[e] & ~loop_set;
      out[e] = {popcount(parallel) + 1, degree[e]};
    }
  }
  return out;
}

class IsomorphismSearch {
 public:
  IsomorphismSearch(const Matroid& a, const Matroid& b)
      : a_(a), b_(b), ra_(a.rank_table()), rb_(b.rank_table()),
        sig_a_(signatures(a)), sig_b_(signatures(b)) {
    order_.resize(a.size());
    for (Element e = 0; e < a.size(); ++e) order_[e] = e;
    std::stable_sort(order_.begin(), order_.end(),
                     [&](Element x, Element y) { return sig_a_[x] < sig_a_[y]; });
    image_.assign(a.size(), -1);
    used_.assign(b.size(), false);
    // sources_[t] runs over the subsets of the assigned prefix (bit i of t
    // selects order_[i]); images_[t] is its image.
    images_.assign(1, 0);
    sources_.assign(1, 0);
  }

  bool run(std::size_t depth = 0) {
    if (depth == order_.size()) return true;
    const Element x = order_[depth];
    const std::size_t prefix = images_.size();
    for (Element y = 0; y < b_.size(); ++y) {
      if (used_[y] || sig_b_[y] != sig_a_[x]) continue;
      if (!consistent(x, y)) continue;
      image_[x] = y;
      used_[y] = true;
      images_.resize(prefix * 2);
      sources_.resize(prefix * 2);
      for (std::size_t t = 0; t < prefix; ++t) {
        images_[prefix + t] = images_[t] | bit(y);
        sources_[prefix + t] = sources_[t] | bit(x);
      }
      if (run(depth + 1)) return true;
      images_.resize(prefix);
      sources_.resize(prefix);
      used_[y] = false;
      image_[x] = -1;
    }
    return false;
  }

  std::vector<Element> mapping() const { return image_; }

 private:
  // Every subset of the assigned prefix plus x keeps its rank under x -> y.
  bool consistent(Element x, Element y) const {
    for (std::size_t t = 0; t < images_.size(); ++t) {
      if (ra_(sources_[t] | bit(x)) != rb_(images_[t] | bit(y))) return false;
    }
    return true;
  }

  const Matroid& a_;
  const Matroid& b_;
  const RankTable& ra_;
  const RankTable& rb_;
  std::vector<Signature> sig_a_;
  std::vector<Signature> sig_b_;
  std::vector<Element> order_;
  std::vector<Element> image_;
  std::vector<bool> used_;
  std::vector<Mask> images_;
  std::vector<Mask> sources_;
};

}  // namespace

Matroid relabel(const Matroid& m, const std::vector<Element>& perm) {
  std::vector<Mask> bases;
  bases.reserve(m.basis_count());
  for (Mask b : m.bases()) {
    Mask out = 0;
    for (Mask rest = b; rest; rest &= rest - 1) out |= bit(perm[std::countr_zero(rest)]);
    bases.push_back(out);
  }
  return Matroid::from_trusted_bases(m.size(), m.rank(), std::move(bases));
}

bool certificates_match(const Matroid& a, const Matroid& b) {
  if (a.size() != b.size() || a.rank() != b.rank() ||
      a.basis_count() != b.basis_count()) {
    return false;
  }
  auto sa = signatures(a);
  auto sb = signatures(b);
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return false;
  if (a.size() > 8 && !(tutte_dc(a) == tutte_dc(b))) return false;
  return true;
}

std::optional<std::vector<Element>> find_isomorphism(const Matroid& a,
                                                     const Matroid& b) {
  if (a.size() != b.size() || a.rank() != b.rank() ||
      a.basis_count() != b.basis_count()) {
    return std::nullopt;
  }
  if (a == b) {
    std::vector<Element> identity(a.size());
    for (Element e = 0; e < a.size(); ++e) identity[e] = e;
    return identity;
  }
  IsomorphismSearch search(a, b);
  if (!search.run()) return std::nullopt;
  return search.mapping();
}

bool are_isomorphic(const Matroid& a, const Matroid& b) {
  if (!certificates_match(a, b)) return false;
  const auto map = find_isomorphism(a, b);
  return map && relabel(a, *map) == b;
}

}  // namespace splitmw
