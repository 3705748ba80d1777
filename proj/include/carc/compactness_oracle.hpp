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

#ifndef CARC_COMPACTNESS_ORACLE_HPP_
#define CARC_COMPACTNESS_ORACLE_HPP_

#include <cstdint>
#include <optional>

#include "carc/arc_model.hpp"
#include "carc/ring_order.hpp"
#include "carc/routing_scheme.hpp"

namespace carc {

struct OracleOptions {
  int vertex_limit = 9;
  // Forbid v inside the intervals of its own arcs.
  bool strict = false;
};

struct OracleResult {
  bool exists_1irs = false;
  std::optional<CyclicOrder> witness_order;
  // Every arc carries at most one interval; arcs no destination uses are empty.
  std::optional<RoutingScheme> witness_labels;
  std::int64_t orders_examined = 0;
  double seconds = 0.0;
};

// Exhaustive search for a shortest-path 1-IRS. Orders are enumerated with
// vertex 0 first and one representative per mirror pair. Throws
// kLimitExceeded when the graph has more than options.vertex_limit vertices
// and kInvalidArgument when it is disconnected.
OracleResult has_shortest_path_1irs(const Graph& graph, const OracleOptions& options = {});

}  // namespace carc

#endif  // CARC_COMPACTNESS_ORACLE_HPP_
