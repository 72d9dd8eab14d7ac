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
#include <vector>

#include "splitmw/matroid.hpp"

namespace splitmw {

/// A bijection p with p(B) a basis of `b` for every basis B of `a`, if one
/// exists. Search assigns elements in signature order and prunes as soon as a
/// partial map disagrees on the rank of some mapped subset.
std::optional<std::vector<Element>> find_isomorphism(const Matroid& a,
                                                     const Matroid& b);

/// Same size, rank, basis count, per-element signature multiset and (for
/// n > 8) Tutte polynomial. Necessary for isomorphism.
bool certificates_match(const Matroid& a, const Matroid& b);

bool are_isomorphic(const Matroid& a, const Matroid& b);

/// Applies a relabeling: element e of m becomes element perm[e].
Matroid relabel(const Matroid& m, const std::vector<Element>& perm);

}  // namespace splitmw
