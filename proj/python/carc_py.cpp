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

// Python bindings. Models and schemes cross the boundary as JSON text; the
// package wrapper in carc/__init__.py converts them to and from dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <utility>
#include <vector>

#include "carc/arc_model.hpp"
#include "carc/clique_cycle.hpp"
#include "carc/compactness_oracle.hpp"
#include "carc/error.hpp"
#include "carc/generator.hpp"
#include "carc/irs_builder.hpp"
#include "carc/routing_scheme.hpp"
#include "carc/verifier.hpp"

namespace py = pybind11;

namespace {

py::dict stats_dict(const carc::IntervalStats& s) {
  py::dict d;
  d["total_intervals"] = s.total_intervals;
  d["bound"] = s.bound;
  d["max_intervals_per_arc"] = s.max_intervals_per_arc;
  d["double_labeled_arcs_per_vertex"] = s.double_labeled_arcs;
  d["max_double_labeled_arcs_per_vertex"] = s.max_double_labeled_arcs;
  d["ok"] = s.ok();
  return d;
}

std::vector<std::pair<int, int>> edges(const std::string& model_json) {
  const carc::Graph g = carc::intersection_graph(carc::parse_model(model_json));
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < g.size(); ++u) {
    for (int w : g.neighbors(u)) {
      if (u < w) out.emplace_back(u, w);
    }
  }
  return out;
}

std::string gen(const std::string& family, int n, std::uint64_t seed) {
  if (family == "ring") return carc::model_to_json(carc::gen_ring(n));
  if (family == "wheel") return carc::model_to_json(carc::gen_wheel(n));
  if (family == "complete") return carc::model_to_json(carc::gen_complete(n));
  if (family == "random") return carc::model_to_json(carc::gen_random(n, seed));
  throw carc::Error(carc::ErrorCode::kInvalidArgument, "unknown family '" + family + "'");
}

py::tuple build(const std::string& model_json) {
  const carc::ArcModel m = carc::parse_model(model_json);
  carc::RoutingScheme s;
  {
    py::gil_scoped_release release;
    s = carc::build_scheme(m);
  }
  const carc::Graph g = carc::intersection_graph(m);
  return py::make_tuple(carc::scheme_to_json(s), stats_dict(carc::interval_stats(s, g.edge_count())));
}

std::string verify(const std::string& model_json, const std::string& scheme_json, int threads) {
  const carc::Graph g = carc::intersection_graph(carc::parse_model(model_json));
  const carc::RoutingScheme s = carc::parse_scheme(scheme_json);
  carc::VerifyOptions opts;
  opts.threads = threads;
  py::gil_scoped_release release;
  return carc::report_to_json(carc::verify_scheme(g, s, opts));
}

std::vector<int> route(const std::string& model_json, const std::string& scheme_json, int src, int dst) {
  const carc::Graph g = carc::intersection_graph(carc::parse_model(model_json));
  return carc::route(carc::parse_scheme(scheme_json), g, src, dst);
}

py::dict oracle1(const std::string& model_json, int limit, bool strict) {
  const carc::Graph g = carc::intersection_graph(carc::parse_model(model_json));
  carc::OracleResult r;
  {
    py::gil_scoped_release release;
    r = carc::has_shortest_path_1irs(g, {.vertex_limit = limit, .strict = strict});
  }
  py::dict d;
  d["exists"] = r.exists_1irs;
  d["orders_examined"] = r.orders_examined;
  d["seconds"] = r.seconds;
  d["witness"] = r.witness_labels ? py::object(py::str(carc::scheme_to_json(*r.witness_labels))) : py::object(py::none());
  return d;
}

}  // namespace

PYBIND11_MODULE(_carc, m) {
  m.doc() = "Interval routing schemes for circular-arc graphs";

  static py::exception<carc::Error> error(m, "CarcError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const carc::Error& e) {
      // args = (code name, message)
      py::tuple args = py::make_tuple(std::string(carc::error_code_name(e.code())), std::string(e.what()));
      PyErr_SetObject(error.ptr(), args.ptr());
    }
  });

  m.def("normalize_model", [](const std::string& text) { return carc::model_to_json(carc::parse_model(text)); },
        py::arg("model_json"));
  m.def("is_real", [](const std::string& text) { return carc::is_real(carc::parse_model(text)); },
        py::arg("model_json"));
  m.def("edges", &edges, py::arg("model_json"));
  m.def("gen", &gen, py::arg("family"), py::arg("n"), py::arg("seed") = 0);
  m.def("build", &build, py::arg("model_json"), "Returns (scheme_json, stats).");
  m.def("verify", &verify, py::arg("model_json"), py::arg("scheme_json"), py::arg("threads") = 1);
  m.def("route", &route, py::arg("model_json"), py::arg("scheme_json"), py::arg("src"), py::arg("dst"));
  m.def("oracle1", &oracle1, py::arg("model_json"), py::arg("limit") = 9, py::arg("strict") = false);
  m.def("clique_cycle", [](const std::string& text) {
    return carc::dump_clique_cycle(carc::build_clique_cycle(carc::parse_model(text)));
  }, py::arg("model_json"));
}
