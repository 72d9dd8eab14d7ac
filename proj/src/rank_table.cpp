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

#include "splitmw/rank_table.hpp"

#include <algorithm>
#include <string>

namespace splitmw {

RankTable::RankTable(const Matroid& m) : n_(m.size()) {
  if (n_ > kRankTableLimit) {
    throw Error(ErrorKind::kOverLimit,
                "rank table needs n <= " + std::to_string(kRankTableLimit) +
                    ", got " + std::to_string(n_));
  }
  const Mask count = Mask{1} << n_;
  std::vector<std::uint8_t> independent(count, 0);
  for (Mask b : m.bases()) independent[b] = 1;
  // A | e > A numerically, so a descending sweep sees supersets first.
  for (Mask a = count; a-- > 0;) {
    if (independent[a]) continue;
    Mask outside = ~a & (count - 1);
    while (outside) {
      const Mask e = outside & -outside;
      if (independent[a | e]) {
        independent[a] = 1;
        break;
      }
      outside ^= e;
    }
  }
  ranks_.assign(count, 0);
  for (Mask a = 1; a < count; ++a) {
    if (independent[a]) {
      ranks_[a] = static_cast<std::uint8_t>(popcount(a));
      continue;
    }
    const auto cap = static_cast<std::uint8_t>(popcount(a) - 1);
    std::uint8_t best = 0;
    for (Mask rest = a; rest && best < cap; rest &= rest - 1) {
      best = std::max(best, ranks_[a & ~(rest & -rest)]);
    }
    ranks_[a] = best;
  }
}

}  // namespace splitmw
