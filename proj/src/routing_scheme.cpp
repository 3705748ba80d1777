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

#include "carc/routing_scheme.hpp"

#include <algorithm>
#include <charconv>
#include <utility>
#include <string>

#include "carc/error.hpp"
#include "json.hpp"

namespace carc {

RoutingScheme::RoutingScheme(CyclicOrder order, std::vector<std::vector<ArcLabel>> arcs)
    : order_(std::move(order)), arcs_(std::move(arcs)) {
  if (static_cast<int>(arcs_.size()) != order_.size()) {
    throw Error(ErrorCode::kStructural, "scheme order and arc table disagree on vertex count");
  }
  for (auto& row : arcs_) {
    std::sort(row.begin(), row.end(),
              [](const ArcLabel& a, const ArcLabel& b) { return a.target < b.target; });
  }
}

const ArcLabel* RoutingScheme::find(int v, int w) const {
  if (v < 0 || v >= vertex_count()) return nullptr;
  const auto& row = arcs_[static_cast<std::size_t>(v)];
  auto it = std::lower_bound(row.begin(), row.end(), w,
                             [](const ArcLabel& a, int t) { return a.target < t; });
  return (it != row.end() && it->target == w) ? &*it : nullptr;
}

ArcLabel* RoutingScheme::find(int v, int w) {
  return const_cast<ArcLabel*>(std::as_const(*this).find(v, w));
}

void RoutingScheme::assign(int v, int w, RingInterval ivl) {
  ArcLabel* arc = find(v, w);
  if (arc == nullptr) {
    throw Error(ErrorCode::kStructural,
                "no arc " + std::to_string(v) + "->" + std::to_string(w) + " to label");
  }
  arc->intervals.push_back(ivl);
}

void RoutingScheme::compress(int v) {
  for (ArcLabel& arc : arcs_[static_cast<std::size_t>(v)]) {
    auto& ivls = arc.intervals;
    bool merged = true;
    while (merged && ivls.size() > 1) {
      merged = false;
      for (std::size_t i = 0; i < ivls.size() && !merged; ++i) {
        for (std::size_t j = 0; j < ivls.size() && !merged; ++j) {
          if (i == j) continue;
          if (auto joined = order_.join(ivls[i], ivls[j])) {
            ivls[i] = *joined;
            ivls.erase(ivls.begin() + static_cast<std::ptrdiff_t>(j));
            merged = true;
          }
        }
      }
    }
  }
}

std::string scheme_to_json(const RoutingScheme& scheme) {
  nlohmann::ordered_json doc;
  auto order = nlohmann::ordered_json::array();
  for (int x : scheme.order().items()) order.push_back(x);
  doc["order"] = std::move(order);
  auto labels = nlohmann::ordered_json::object();
  for (int v = 0; v < scheme.vertex_count(); ++v) {
    for (const ArcLabel& arc : scheme.arcs(v)) {
      auto list = nlohmann::ordered_json::array();
      for (const RingInterval& ivl : arc.intervals) list.push_back({ivl.from, ivl.to});
      labels[std::to_string(v) + "->" + std::to_string(arc.target)] = std::move(list);
    }
  }
  doc["labels"] = std::move(labels);
  return doc.dump();
}

namespace {

int parse_id(std::string_view s, std::string_view key) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw Error(ErrorCode::kMalformedInput, "bad arc key \"" + std::string(key) + "\"");
  }
  return value;
}

}  // namespace

RoutingScheme parse_scheme(std::string_view text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kMalformedInput, std::string("scheme is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("order") || !doc.contains("labels") ||
      !doc["order"].is_array() || !doc["labels"].is_object()) {
    throw Error(ErrorCode::kMalformedInput, R"(scheme must hold an "order" array and a "labels" object)");
  }
  std::vector<int> items;
  for (const auto& x : doc["order"]) {
    if (!x.is_number_integer()) throw Error(ErrorCode::kMalformedInput, "order entries must be integers");
    items.push_back(x.get<int>());
  }
  CyclicOrder order = [&] {
    try {
      return CyclicOrder(std::move(items));
    } catch (const Error& e) {
      throw Error(ErrorCode::kStructural, std::string("scheme order: ") + e.what());
    }
  }();
  const int n = order.size();
  std::vector<std::vector<ArcLabel>> arcs(static_cast<std::size_t>(n));
  for (const auto& [key, value] : doc["labels"].items()) {
    const auto arrow = key.find("->");
    if (arrow == std::string::npos) {
      throw Error(ErrorCode::kMalformedInput, "bad arc key \"" + key + "\"");
    }
    const int v = parse_id(std::string_view(key).substr(0, arrow), key);
    const int w = parse_id(std::string_view(key).substr(arrow + 2), key);
    if (v < 0 || v >= n || w < 0 || w >= n || v == w) {
      throw Error(ErrorCode::kStructural, "arc " + key + " names an unknown vertex");
    }
    if (!value.is_array()) throw Error(ErrorCode::kMalformedInput, "labels of " + key + " must be a list");
    ArcLabel arc{w, {}};
    for (const auto& ivl : value) {
      if (!ivl.is_array() || ivl.size() != 2 || !ivl[0].is_number_integer() || !ivl[1].is_number_integer()) {
        throw Error(ErrorCode::kMalformedInput, "intervals of " + key + " must be integer pairs");
      }
      const int a = ivl[0].get<int>();
      const int b = ivl[1].get<int>();
      if (a < 0 || a >= n || b < 0 || b >= n) {
        throw Error(ErrorCode::kStructural, "interval on " + key + " names an unknown vertex");
      }
      arc.intervals.push_back({a, b});
    }
    auto& row = arcs[static_cast<std::size_t>(v)];
    if (std::any_of(row.begin(), row.end(), [&](const ArcLabel& x) { return x.target == w; })) {
      throw Error(ErrorCode::kStructural, "arc " + key + " listed twice");
    }
    row.push_back(std::move(arc));
  }
  return RoutingScheme(std::move(order), std::move(arcs));
}

}  // namespace carc
