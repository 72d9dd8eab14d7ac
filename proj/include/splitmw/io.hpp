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

#include <string>
#include <string_view>

#include "json.hpp"
#include "splitmw/flats.hpp"
#include "splitmw/graph.hpp"
#include "splitmw/matroid.hpp"
#include "splitmw/merino_welsh.hpp"
#include "splitmw/proof_trace.hpp"
#include "splitmw/tutte.hpp"

namespace splitmw {

using Json = nlohmann::ordered_json;

// Document formats, all compact single-line JSON:
//   matroid-bases-v1  {"format","n","rank","bases":[[...],...]}
//   multigraph-v1     {"format","vertices","edges":[[u,v],...]}
//   tutte-v1          {"format","rank","corank","coeffs":[["c00",...],...]}
//   cyclic-flats-v1   {"format","flats":[{"set","rank"}],"proper_antichain",...}
//   mw-v1             {"format","n","rank","t20","t02","t11","max","add","mult"}
//   trace-v1          {"format","rule","matroid","mw","children":[...]}
// Big integers are decimal strings.

Json to_json(const Matroid& m);
Json to_json(const Multigraph& g);
Json to_json(const TuttePolynomial& t, int rank, int corank);
Json to_json(const CyclicFlatReport& r);
Json to_json(const MWReport& r);
Json to_json(const ProofNode& node);
Json to_json(const ProofTrace& t);

/// Canonical text: bases sorted ascending, list sorted lexicographically.
std::string serialize(const Matroid& m);

Matroid parse_matroid(std::string_view text);
Multigraph parse_multigraph(std::string_view text);
TuttePolynomial parse_tutte(std::string_view text);

/// Graphviz description of a trace tree.
std::string to_dot(const ProofTrace& t);

}  // namespace splitmw
