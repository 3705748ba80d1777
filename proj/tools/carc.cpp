// Copyright 2026 The carc Authors
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

// Command-line front end. Data goes to stdout, diagnostics to stderr.
// Exit codes: 0 success, 1 verification failure, 2 input or structural error.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "carc/arc_model.hpp"
#include "carc/clique_cycle.hpp"
#include "carc/compactness_oracle.hpp"
#include "carc/error.hpp"
#include "carc/generator.hpp"
#include "carc/irs_builder.hpp"
#include "carc/routing_scheme.hpp"
#include "carc/verifier.hpp"
#include "json.hpp"

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitError = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw carc::Error(carc::ErrorCode::kMalformedInput, "cannot read " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text << '\n';
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw carc::Error(carc::ErrorCode::kInvalidArgument, "cannot write " + path);
  out << text << '\n';
}

std::string stats_json(const carc::IntervalStats& s) {
  nlohmann::ordered_json j;
  j["total_intervals"] = s.total_intervals;
  j["bound"] = s.bound;
  j["max_intervals_per_arc"] = s.max_intervals_per_arc;
  j["double_labeled_arcs_per_vertex"] = s.double_labeled_arcs;
  j["max_double_labeled_arcs_per_vertex"] = s.max_double_labeled_arcs;
  j["ok"] = s.ok();
  return j.dump();
}

int resolve_threads(int flag) {
  if (const char* env = std::getenv("CARC_THREADS"); env != nullptr && *env != '\0') {
    try {
      flag = std::stoi(env);
    } catch (const std::exception&) {
      throw carc::Error(carc::ErrorCode::kInvalidArgument, std::string("CARC_THREADS is not a number: ") + env);
    }
  }
  if (flag <= 0) flag = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  return flag;
}

struct Options {
  std::string model;
  std::string scheme;
  std::string out;
  std::string family = "random";
  int n = 0;
  std::uint64_t seed = 0;
  int src = 0;
  int dst = 0;
  int threads = 0;
  int limit = 9;
  bool strict = false;
};

int cmd_build(const Options& o) {
  const carc::ArcModel model = carc::parse_model(read_file(o.model));
  const carc::RoutingScheme scheme = carc::build_scheme(model);
  const carc::Graph graph = carc::intersection_graph(model);
  const std::string stats = stats_json(carc::interval_stats(scheme, graph.edge_count()));
  write_output(o.out, carc::scheme_to_json(scheme));
  // Keep stdout a single JSON document when the scheme goes there.
  (o.out.empty() || o.out == "-" ? std::cerr : std::cout) << stats << '\n';
  return 0;
}

int cmd_verify(const Options& o) {
  const carc::ArcModel model = carc::parse_model(read_file(o.model));
  carc::validate_model(model);
  const carc::RoutingScheme scheme = carc::parse_scheme(read_file(o.scheme));
  const carc::Graph graph = carc::intersection_graph(model);
  carc::VerifyOptions vo;
  vo.threads = resolve_threads(o.threads);
  const carc::VerificationReport report = carc::verify_scheme(graph, scheme, vo);
  std::cout << carc::report_to_json(report) << '\n';
  return report.passed() ? 0 : kExitFailure;
}

int cmd_route(const Options& o) {
  const carc::ArcModel model = carc::parse_model(read_file(o.model));
  carc::validate_model(model);
  const carc::RoutingScheme scheme = carc::parse_scheme(read_file(o.scheme));
  const carc::Graph graph = carc::intersection_graph(model);
  if (o.src < 0 || o.src >= graph.size() || o.dst < 0 || o.dst >= graph.size()) {
    throw carc::Error(carc::ErrorCode::kUnknownElement, "vertex out of range");
  }
  std::string line;
  for (int x : carc::route(scheme, graph, o.src, o.dst)) {
    if (!line.empty()) line += ' ';
    line += 'v' + std::to_string(x);
  }
  std::cout << line << '\n';
  return 0;
}

int cmd_gen(const Options& o) {
  carc::ArcModel model;
  if (o.family == "ring") {
    model = carc::gen_ring(o.n);
  } else if (o.family == "complete") {
    model = carc::gen_complete(o.n);
  } else if (o.family == "wheel") {
    model = carc::gen_wheel(o.n);
  } else {
    model = carc::gen_random(o.n, o.seed);
  }
  write_output(o.out, carc::model_to_json(model));
  return 0;
}

int cmd_oracle(const Options& o) {
  const carc::ArcModel model = carc::parse_model(read_file(o.model));
  carc::validate_model(model);
  const carc::Graph graph = carc::intersection_graph(model);
  carc::OracleOptions oo;
  oo.vertex_limit = o.limit;
  oo.strict = o.strict;
  const carc::OracleResult result = carc::has_shortest_path_1irs(graph, oo);
  std::cerr << "orders examined: " << result.orders_examined << ", seconds: " << result.seconds << '\n';
  if (!result.exists_1irs) {
    std::cout << "no 1-IRS\n";
    return 0;
  }
  carc::VerifyOptions vo;
  vo.strict = o.strict;
  const carc::VerificationReport report = carc::verify_scheme(graph, *result.witness_labels, vo);
  if (!report.passed()) {
    std::cerr << "witness failed re-verification\n" << carc::report_to_json(report) << '\n';
    return kExitFailure;
  }
  write_output(o.out, carc::scheme_to_json(*result.witness_labels));
  return 0;
}

int cmd_cliques(const Options& o) {
  const carc::ArcModel model = carc::parse_model(read_file(o.model));
  carc::validate_model(model);
  std::cout << carc::dump_clique_cycle(carc::build_clique_cycle(model));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Interval routing schemes for circular-arc graphs"};
  app.require_subcommand(1);
  Options o;

  auto* build = app.add_subcommand("build", "Build a 2-interval routing scheme for an arc model");
  build->add_option("--model", o.model, "Arc model JSON")->required();
  build->add_option("--out", o.out, "Scheme output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "Check a scheme against the model's shortest paths");
  verify->add_option("--model", o.model, "Arc model JSON")->required();
  verify->add_option("--scheme", o.scheme, "Scheme JSON")->required();
  verify->add_option("--threads", o.threads, "Worker threads, 0 for all cores (CARC_THREADS overrides)");

  auto* route = app.add_subcommand("route", "Follow a scheme from src to dst");
  route->add_option("--model", o.model, "Arc model JSON")->required();
  route->add_option("--scheme", o.scheme, "Scheme JSON")->required();
  route->add_option("--src", o.src)->required();
  route->add_option("--dst", o.dst)->required();

  auto* gen = app.add_subcommand("gen", "Generate an arc model");
  gen->add_option("--family", o.family)->check(CLI::IsMember({"ring", "wheel", "complete", "random"}));
  gen->add_option("--n", o.n, "Vertices (outer vertices for wheels)")->required();
  gen->add_option("--seed", o.seed, "Seed for the random family");
  gen->add_option("--out", o.out, "Output file (default stdout)");

  auto* oracle = app.add_subcommand("oracle1", "Search exhaustively for a shortest-path 1-IRS");
  oracle->add_option("--model", o.model, "Arc model JSON")->required();
  oracle->add_option("--limit", o.limit, "Refuse graphs with more vertices");
  oracle->add_flag("--strict", o.strict, "Forbid a vertex inside its own intervals");
  oracle->add_option("--out", o.out, "Witness output file (default stdout)");

  auto* cliques = app.add_subcommand("cliques", "Print the clique cycle of an arc model");
  cliques->add_option("--model", o.model, "Arc model JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  try {
    if (*build) return cmd_build(o);
    if (*verify) return cmd_verify(o);
    if (*route) return cmd_route(o);
    if (*gen) return cmd_gen(o);
    if (*oracle) return cmd_oracle(o);
    if (*cliques) return cmd_cliques(o);
  } catch (const carc::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code() == carc::ErrorCode::kRouteFailure ? kExitFailure : kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
