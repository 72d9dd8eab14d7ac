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

#include <cstdint>
#include <vector>

#include "splitmw/matroid.hpp"

namespace splitmw {

inline constexpr int kRankTableLimit = 24;

/// Rank of every subset of the ground set, one byte per subset.
class RankTable {
 public:
  explicit RankTable(const Matroid& m);

  int operator()(Mask a) const { return ranks_[a]; }
  int size() const { return n_; }
  bool independent(Mask a) const { return ranks_[a] == popcount(a); }

 private:
  int n_;
  std::vector<std::uint8_t> ranks_;
};

}  // namespace splitmw
