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

// splitmw: construct matroids, compute Tutte polynomials, check the
// Merino-Welsh inequalities and replay the split-matroid induction.
//
// Exit codes: 0 success, 1 counterexample / classification breach /
// verification failure, 2 usage or input error.

#include <fstream>
#include <iostream>
#include <iterator>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "splitmw/corpus.hpp"
#include "splitmw/flats.hpp"
#include "splitmw/graph.hpp"
#include "splitmw/io.hpp"
#include "splitmw/merino_welsh.hpp"
#include "splitmw/proof_trace.hpp"
#include "splitmw/selftest.hpp"
#include "splitmw/tutte.hpp"

namespace {

using namespace splitmw;

constexpr int kExitFound = 1;
constexpr int kExitUsage = 2;

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorKind::kParse, "expected comma-separated integers, got '" + text + "'");
    }
  }
  return out;
}

std::pair<int, int> parse_pair(const std::string& text) {
  const auto values = parse_int_list(text);
  if (values.size() != 2) throw Error(ErrorKind::kParse, "expected k,n, got '" + text + "'");
  return {values[0], values[1]};
}

std::string read_source(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kParse, "cannot open " + path);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

// INPUT is a path, "-" for stdin, or uniform(k,n) / minimal(k,n) /
// rank2(a1,...). A multigraph-v1 document is read as its cycle matroid.
Matroid load_matroid(const std::string& input) {
  static const std::regex inline_form(R"(^(uniform|minimal|rank2)\(([-0-9, ]+)\)$)");
  std::smatch match;
  if (std::regex_match(input, match, inline_form)) {
    std::string args = match[2];
    std::erase(args, ' ');
    if (match[1] == "rank2") return rank2_from_partition(parse_int_list(args));
    const auto [k, n] = parse_pair(args);
    return match[1] == "uniform" ? uniform(k, n) : minimal(k, n);
  }
  const std::string text = read_source(input);
  if (text.find("multigraph-v1") != std::string::npos) return graphic(parse_multigraph(text));
  return parse_matroid(text);
}

struct Options {
  int threads = 1;
  std::size_t memo_cap = std::size_t{256} << 20;
};

TutteEngineOptions engine_options(const Options& o) {
  TutteEngineOptions out;
  out.memo_capacity_bytes = o.memo_cap;
  return out;
}

int run_construct(const std::string& uniform_arg, const std::string& minimal_arg,
                  const std::string& graphic_arg, const std::string& rank2_arg) {
  const int chosen = !uniform_arg.empty() + !minimal_arg.empty() + !graphic_arg.empty() +
                     !rank2_arg.empty();
  if (chosen != 1) {
    throw Error(ErrorKind::kParse,
                "construct needs exactly one of --uniform, --minimal, --graphic, --rank2");
  }
  Matroid m = uniform(0, 0);
  if (!uniform_arg.empty()) {
    const auto [k, n] = parse_pair(uniform_arg);
    m = uniform(k, n);
  } else if (!minimal_arg.empty()) {
    const auto [k, n] = parse_pair(minimal_arg);
    m = minimal(k, n);
  } else if (!graphic_arg.empty()) {
    m = graphic(parse_multigraph(read_source(graphic_arg)));
  } else {
    m = rank2_from_partition(parse_int_list(rank2_arg));
  }
  std::cout << serialize(m) << "\n";
  return 0;
}

int run_tutte(const std::string& input, const std::string& engine_name, const Options& o) {
  const Matroid m = load_matroid(input);
  TutteEngine engine(engine_options(o));
  TuttePolynomial t;
  if (engine_name == "subset") {
    t = tutte_subset_sum(m);
  } else if (engine_name == "dc") {
    t = engine.compute(m);
  } else {
    t = engine.compute(m);
    if (!(t == tutte_subset_sum(m))) {
      std::cerr << "EngineMismatch: deletion-contraction and subset-sum disagree\n";
      return kExitFound;
    }
  }
  std::cout << to_json(t, m.rank(), m.corank()).dump() << "\n";
  return 0;
}

int run_check_mw(const std::string& input, const Options& o) {
  const Matroid m = load_matroid(input);
  TutteEngine engine(engine_options(o));
  const MWReport r = check_mw(m, &engine);
  std::cout << to_json(r).dump() << "\n";
  return r.counterexample() ? kExitFound : 0;
}

int run_cyclic_flats(const std::string& input) {
  std::cout << to_json(cyclic_flats(load_matroid(input))).dump() << "\n";
  return 0;
}

int run_is_split(const std::string& input) {
  const Matroid m = load_matroid(input);
  Json out;
  out["format"] = "split-v1";
  out["split"] = is_split(m);
  out["connected_split"] = is_connected_split(m);
  std::cout << out.dump() << "\n";
  return 0;
}

int run_enumerate_rank2(int max_n, const Options& o) {
  if (max_n < 2) throw Error(ErrorKind::kParse, "--max-n must be at least 2");
  TutteEngine engine(engine_options(o));
  bool all_pass = true;
  for (int n = 2; n <= max_n; ++n) {
    const Rank2Census census = rank2_census(n, o.threads, &engine);
    for (const auto& report : census.reports) std::cout << to_json(report).dump() << "\n";
    Json summary;
    summary["format"] = "rank2-census-v1";
    summary["n"] = n;
    summary["partitions"] = census.class_size_multisets;
    summary["all_pass"] = census.all_pass;
    std::cout << summary.dump() << "\n";
    std::cout.flush();
    all_pass = all_pass && census.all_pass;
  }
  return all_pass ? 0 : kExitFound;
}

int run_trace(const std::string& input, bool dot, bool dualize, const Options& o) {
  const Matroid m = load_matroid(input);
  TutteEngine engine(engine_options(o));
  TraceOptions options;
  options.engine = &engine;
  options.dualize_to_lower_rank = dualize;
  ProofTrace t;
  try {
    t = trace(m, options);
  } catch (const ClassificationFailure& ex) {
    std::cerr << to_string(ex.kind()) << ": " << ex.what() << "\n"
              << serialize(ex.matroid()) << "\n";
    return kExitFound;
  }
  t.verified = verify_trace(t);
  if (dot) {
    std::cout << to_dot(t);
  } else {
    std::cout << to_json(t).dump() << "\n";
  }
  return t.verified ? 0 : kExitFound;
}

int run_oracle(const std::string& path) {
  const Multigraph g = parse_multigraph(read_source(path));
  const TuttePolynomial t = tutte_dc(graphic(g));
  const std::uint64_t tau = count_spanning_trees(g);
  const std::uint64_t alpha = count_acyclic_orientations(g);
  const std::uint64_t alpha_star = count_totally_cyclic_orientations(g);
  const BigInt t11 = evaluate(t, 1, 1);
  const BigInt t20 = evaluate(t, 2, 0);
  const BigInt t02 = evaluate(t, 0, 2);
  // T(1,1) counts spanning forests, which equals tau only for connected graphs.
  const bool connected = is_connected(g);
  const bool consistent = (!connected || t11 == tau) && t20 == alpha && t02 == alpha_star;
  Json out;
  out["format"] = "oracle-v1";
  out["tau"] = std::to_string(tau);
  out["alpha"] = std::to_string(alpha);
  out["alpha_star"] = std::to_string(alpha_star);
  out["t11"] = t11.str();
  out["t20"] = t20.str();
  out["t02"] = t02.str();
  out["connected"] = connected;
  out["bridgeless"] = is_bridgeless(g);
  out["consistent"] = consistent;
  std::cout << out.dump() << "\n";
  return consistent ? 0 : kExitFound;
}

int run_selftest(const Options& o) {
  const auto results = run_acceptance(std::cout, o.threads);
  for (const auto& r : results) {
    if (!r.pass) return kExitFound;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Split matroid toolkit: Tutte polynomials, cyclic flats, Merino-Welsh checks"};
  app.require_subcommand(1, 1);
  Options options;
  app.add_option("--threads", options.threads, "Worker threads for census work")
      ->check(CLI::PositiveNumber);
  app.add_option("--memo-cap", options.memo_cap, "Tutte memo capacity in bytes");

  std::string input = "-";
  std::string uniform_arg, minimal_arg, graphic_arg, rank2_arg, engine_name = "dc";
  int max_n = 12;
  bool dot = false;
  bool dualize = false;

  auto* construct = app.add_subcommand("construct", "Emit a matroid-bases-v1 document");
  construct->add_option("--uniform", uniform_arg, "k,n");
  construct->add_option("--minimal", minimal_arg, "k,n");
  construct->add_option("--graphic", graphic_arg, "multigraph-v1 file or -");
  construct->add_option("--rank2", rank2_arg, "parallel class sizes a1,a2,...");

  auto* tutte = app.add_subcommand("tutte", "Tutte polynomial as tutte-v1");
  tutte->add_option("input", input, "matroid file, - or inline form");
  tutte->add_option("--engine", engine_name, "subset, dc or both")
      ->check(CLI::IsMember({"subset", "dc", "both"}));

  auto* check = app.add_subcommand("check-mw", "Merino-Welsh inequalities as mw-v1");
  check->add_option("input", input, "matroid file, - or inline form");

  auto* flats_cmd = app.add_subcommand("cyclic-flats", "Cyclic flats as cyclic-flats-v1");
  flats_cmd->add_option("input", input, "matroid file, - or inline form");

  auto* split_cmd = app.add_subcommand("is-split", "Split classification");
  split_cmd->add_option("input", input, "matroid file, - or inline form");

  auto* rank2 = app.add_subcommand("enumerate-rank2", "Stream the rank-2 census");
  rank2->add_option("--max-n", max_n, "largest ground set size")->required();

  auto* trace_cmd = app.add_subcommand("trace", "Replay the induction as trace-v1");
  trace_cmd->add_option("input", input, "matroid file, - or inline form");
  trace_cmd->add_flag("--dot", dot, "emit Graphviz instead of JSON");
  trace_cmd->add_flag("--dualize", dualize, "dualize before base cases when corank < rank");

  auto* oracle = app.add_subcommand("oracle", "Brute-force tau/alpha/alpha* for a graph");
  oracle->add_option("graph", input, "multigraph-v1 file or -")->required();

  auto* selftest = app.add_subcommand("selftest", "Run the acceptance suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*construct) return run_construct(uniform_arg, minimal_arg, graphic_arg, rank2_arg);
    if (*tutte) return run_tutte(input, engine_name, options);
    if (*check) return run_check_mw(input, options);
    if (*flats_cmd) return run_cyclic_flats(input);
    if (*split_cmd) return run_is_split(input);
    if (*rank2) return run_enumerate_rank2(max_n, options);
    if (*trace_cmd) return run_trace(input, dot, dualize, options);
    if (*oracle) return run_oracle(input);
    if (*selftest) return run_selftest(options);
  } catch (const ClassificationFailure& ex) {
    std::cerr << to_string(ex.kind()) << ": " << ex.what() << "\n";
    return ex.kind() == ErrorKind::kNotSplit ? kExitUsage : kExitFound;
  } catch (const Error& ex) {
    std::cerr << to_string(ex.kind()) << ": " << ex.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
