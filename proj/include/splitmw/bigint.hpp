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

#include <boost/multiprecision/cpp_int.hpp>

namespace splitmw {

/// Exact signed integer used for every Tutte coefficient and evaluation.
using BigInt = boost::multiprecision::cpp_int;

/// C(n, k); zero when k < 0, n < 0 or k > n.
BigInt binomial(int n, int k);

/// C(n, k) in 64 bits. Callers keep n small enough that it cannot overflow.
std::uint64_t binomial_u64(int n, int k);

}  // namespace splitmw
