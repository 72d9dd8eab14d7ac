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

#include <optional>
#include <utility>
#include <vector>

#include "splitmw/matroid.hpp"

namespace splitmw {

inline constexpr int kFlatEnumerationLimit = 16;

/// Orders subsets by size, then lexicographically by their sorted elements.
bool canonical_less(Mask a, Mask b);

/// Every flat of m, canonically sorted. Closes each of the 2^n subsets.
std::vector<Mask> flats(const Matroid& m, int limit = kFlatEnumerationLimit);

/// True iff m restricted to f has no coloops.
bool is_cyclic_set(const Matroid& m, Mask f);

struct CyclicFlatReport {
  std::vector<Mask> flats;         // all cyclic flats, canonical order
  std::vector<int> ranks;          // parallel to flats
  std::vector<Mask> proper_flats;  // flats minus {empty, E}
  bool is_antichain = true;
  std::optional<std::pair<Mask, Mask>> nested_pair;  // first F1 < F2 found
  bool is_connected_split = false;
  bool is_split = false;
  bool is_paving = false;
  bool is_copaving = false;
};

CyclicFlatReport cyclic_flats(const Matroid& m, int limit = kFlatEnumerationLimit);

bool is_connected_split(const Matroid& m);

/// At most one component is non-uniform, and that one is connected split.
bool is_split(const Matroid& m);

/// Every circuit has at least rank(m) elements.
bool is_paving(const Matroid& m);
bool is_copaving(const Matroid& m);

}  // namespace splitmw
