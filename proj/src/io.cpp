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

#include "splitmw/io.hpp"

#include <algorithm>
#include <sstream>

namespace splitmw {
namespace {

Json sorted_elements(Mask m) {
  Json out = Json::array();
  for (Element e : elements_of(m)) out.push_back(e);
  return out;
}

Json parse_document(std::string_view text, const char* format) {
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorKind::kParse, std::string("malformed JSON: ") + ex.what());
  }
  if (!doc.is_object() || !doc.contains("format") || doc["format"] != format) {
    throw Error(ErrorKind::kParse, std::string("expected a ") + format + " document");
  }
  return doc;
}

template <typename T>
T field(const Json& doc, const char* name) {
  if (!doc.contains(name)) throw Error(ErrorKind::kParse, std::string("missing field ") + name);
  try {
    return doc[name].get<T>();
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorKind::kParse, std::string("bad field ") + name + ": " + ex.what());
  }
}

Json node_fields(const ProofNode& node) {
  Json out;
  out["rule"] = to_string(node.rule);
  if (node.rule == ProofRule::kDeleteContract) out["pivot"] = node.pivot;
  if (node.rule == ProofRule::kBaseMinimal) {
    out["minimal"] = {{"k", node.minimal_k}, {"n", node.minimal_n}};
  }
  out["labels"] = node.labels;
  out["matroid"] = to_json(node.matroid);
  out["mw"] = to_json(node.mw);
  out["check"] = node.check_passed;
  Json children = Json::array();
  for (const auto& child : node.children) children.push_back(to_json(child));
  out["children"] = std::move(children);
  return out;
}

void dot_nodes(const ProofNode& node, int& next_id, int parent, std::ostringstream& out) {
  const int id = next_id++;
  out << "  n" << id << " [label=\"" << to_string(node.rule);
  if (node.rule == ProofRule::kDeleteContract) out << " e=" << node.pivot;
  if (node.rule == ProofRule::kBaseMinimal) {
    out << " T(" << node.minimal_k << "," << node.minimal_n << ")";
  }
  out << "\\nn=" << node.matroid.size() << " r=" << node.matroid.rank()
      << "\\nT20=" << node.mw.t20 << " T02=" << node.mw.t02 << " T11=" << node.mw.t11
      << "\"";
  if (!node.check_passed) out << " color=red";
  out << "];\n";
  if (parent >= 0) out << "  n" << parent << " -> n" << id << ";\n";
  for (const auto& child : node.children) dot_nodes(child, next_id, id, out);
}

}  // namespace

Json to_json(const Matroid& m) {
  std::vector<std::vector<Element>> bases;
  bases.reserve(m.basis_count());
  for (Mask b : m.bases()) bases.push_back(elements_of(b));
  std::sort(bases.begin(), bases.end());
  Json out;
  out["format"] = "matroid-bases-v1";
  out["n"] = m.size();
  out["rank"] = m.rank();
  out["bases"] = bases;
  return out;
}

Json to_json(const Multigraph& g) {
  Json edges = Json::array();
  for (const auto& [u, v] : g.edges) edges.push_back({u, v});
  Json out;
  out["format"] = "multigraph-v1";
  out["vertices"] = g.vertex_count;
  out["edges"] = std::move(edges);
  return out;
}

Json to_json(const TuttePolynomial& t, int rank, int corank) {
  Json rows = Json::array();
  for (int i = 0; i <= rank; ++i) {
    Json row = Json::array();
    for (int j = 0; j <= corank; ++j) row.push_back(t.at(i, j).str());
    rows.push_back(std::move(row));
  }
  Json out;
  out["format"] = "tutte-v1";
  out["rank"] = rank;
  out["corank"] = corank;
  out["coeffs"] = std::move(rows);
  return out;
}

Json to_json(const CyclicFlatReport& r) {
  Json flats = Json::array();
  for (std::size_t i = 0; i < r.flats.size(); ++i) {
    Json f;
    f["set"] = sorted_elements(r.flats[i]);
    f["rank"] = r.ranks[i];
    flats.push_back(std::move(f));
  }
  Json out;
  out["format"] = "cyclic-flats-v1";
  out["flats"] = std::move(flats);
  out["proper_antichain"] = r.is_antichain;
  out["connected_split"] = r.is_connected_split;
  out["split"] = r.is_split;
  out["paving"] = r.is_paving;
  out["copaving"] = r.is_copaving;
  if (r.nested_pair) {
    out["nested_chain"] = {sorted_elements(r.nested_pair->first),
                           sorted_elements(r.nested_pair->second)};
  }
  return out;
}

Json to_json(const MWReport& r) {
  Json out;
  out["format"] = "mw-v1";
  out["n"] = r.n;
  out["rank"] = r.rank;
  out["t20"] = r.t20.str();
  out["t02"] = r.t02.str();
  out["t11"] = r.t11.str();
  out["max"] = r.max_ok;
  out["add"] = r.add_ok;
  out["mult"] = r.mult_ok;
  return out;
}

Json to_json(const ProofNode& node) { return node_fields(node); }

Json to_json(const ProofTrace& t) {
  Json out;
  out["format"] = "trace-v1";
  const Json fields = node_fields(t.root);
  for (const auto& [key, value] : fields.items()) out[key] = value;
  out["verified"] = t.verified;
  return out;
}

std::string serialize(const Matroid& m) { return to_json(m).dump(); }

Matroid parse_matroid(std::string_view text) {
  const Json doc = parse_document(text, "matroid-bases-v1");
  const int n = field<int>(doc, "n");
  const int rank = field<int>(doc, "rank");
  const auto bases = field<std::vector<std::vector<Element>>>(doc, "bases");
  return Matroid::from_bases(n, rank, bases);
}

Multigraph parse_multigraph(std::string_view text) {
  const Json doc = parse_document(text, "multigraph-v1");
  Multigraph g;
  g.vertex_count = field<int>(doc, "vertices");
  for (const auto& edge : field<std::vector<std::vector<int>>>(doc, "edges")) {
    if (edge.size() != 2) throw Error(ErrorKind::kParse, "edges must be vertex pairs");
    g.edges.emplace_back(edge[0], edge[1]);
  }
  g.validate();
  return g;
}

TuttePolynomial parse_tutte(std::string_view text) {
  const Json doc = parse_document(text, "tutte-v1");
  const int rank = field<int>(doc, "rank");
  const int corank = field<int>(doc, "corank");
  const auto rows = field<std::vector<std::vector<std::string>>>(doc, "coeffs");
  if (rank < 0 || corank < 0 || static_cast<int>(rows.size()) != rank + 1) {
    throw Error(ErrorKind::kParse, "coefficient table does not match rank");
  }
  TuttePolynomial t(rank, corank);
  for (int i = 0; i <= rank; ++i) {
    if (static_cast<int>(rows[i].size()) != corank + 1) {
      throw Error(ErrorKind::kParse, "coefficient row does not match corank");
    }
    for (int j = 0; j <= corank; ++j) {
      try {
        t.coeff(i, j) = BigInt(rows[i][j]);
      } catch (const std::exception&) {
        throw Error(ErrorKind::kParse, "bad coefficient " + rows[i][j]);
      }
    }
  }
  return t;
}

std::string to_dot(const ProofTrace& t) {
  std::ostringstream out;
  out << "digraph trace {\n  node [shape=box];\n";
  int next_id = 0;
  dot_nodes(t.root, next_id, -1, out);
  out << "}\n";
  return out.str();
}

}  // namespace splitmw
