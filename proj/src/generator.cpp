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

#include "carc/generator.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "carc/error.hpp"

namespace carc {

ArcModel gen_ring(int k) {
  if (k < 3) throw Error(ErrorCode::kInvalidArgument, "ring needs at least 3 vertices, got " + std::to_string(k));
  ArcModel m;
  m.n = k;
  for (int i = 0; i < k; ++i) m.arcs.push_back({2 * i, (2 * i + 3) % (2 * k)});
  return m;
}

ArcModel gen_wheel(int k) {
  if (k < 3) throw Error(ErrorCode::kInvalidArgument, "wheel needs at least 3 outer vertices, got " + std::to_string(k));
  ArcModel m;
  m.n = k + 1;
  for (int i = 0; i + 1 < k; ++i) m.arcs.push_back({2 * i, 2 * i + 3});
  // The closing outer arc runs over the two hub endpoints.
  m.arcs.push_back({2 * k - 2, 1});
  m.arcs.push_back({2 * k + 1, 2 * k});
  return m;
}

ArcModel gen_complete(int n) {
  if (n < 3) throw Error(ErrorCode::kInvalidArgument, "complete graph needs at least 3 vertices, got " + std::to_string(n));
  const int length = n % 2 == 0 ? n + 1 : n + 2;
  ArcModel m;
  m.n = n;
  for (int i = 0; i < n; ++i) m.arcs.push_back({2 * i, (2 * i + length) % (2 * n)});
  return m;
}

namespace {

double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

ArcModel rank_endpoints(int n, const std::vector<double>& starts, const std::vector<double>& lengths) {
  // (value, arc, is_end)
  std::vector<std::tuple<double, int, int>> ends;
  ends.reserve(static_cast<std::size_t>(2 * n));
  for (int i = 0; i < n; ++i) {
    const double s = starts[static_cast<std::size_t>(i)];
    double e = s + lengths[static_cast<std::size_t>(i)];
    if (e >= 1.0) e -= 1.0;
    ends.emplace_back(s, i, 0);
    ends.emplace_back(e, i, 1);
  }
  std::sort(ends.begin(), ends.end());
  ArcModel m;
  m.n = n;
  m.arcs.resize(static_cast<std::size_t>(n));
  for (int p = 0; p < 2 * n; ++p) {
    const auto& [value, arc, is_end] = ends[static_cast<std::size_t>(p)];
    (is_end ? m.arcs[static_cast<std::size_t>(arc)].end : m.arcs[static_cast<std::size_t>(arc)].start) = p;
  }
  return m;
}

}  // namespace

ArcModel gen_random(int n, std::uint64_t seed) {
  if (n < 3) throw Error(ErrorCode::kInvalidArgument, "random model needs n >= 3, got " + std::to_string(n));
  constexpr int kAttempts = 16;
  constexpr double kMaxLength = 0.999;
  std::mt19937_64 rng(seed);
  const double lo = 2.0 / n;
  std::vector<double> starts(static_cast<std::size_t>(n));
  std::vector<double> lengths(static_cast<std::size_t>(n));
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    const double u = unit(rng);
    const double lmax = std::min(kMaxLength, lo + (1.0 - lo) * u * u * u);
    for (int i = 0; i < n; ++i) {
      starts[static_cast<std::size_t>(i)] = unit(rng);
      lengths[static_cast<std::size_t>(i)] = std::min(kMaxLength, lmax * (0.05 + 0.95 * unit(rng)));
    }
    ArcModel m = rank_endpoints(n, starts, lengths);
    if (is_real(m)) return m;
  }
  for (;;) {
    for (double& len : lengths) len = std::min(kMaxLength, len * 1.25);
    ArcModel m = rank_endpoints(n, starts, lengths);
    if (is_real(m)) return m;
    if (std::all_of(lengths.begin(), lengths.end(), [](double x) { return x >= kMaxLength; })) {
      // Every arc nearly closes the circle and a point is still bare: all
      // the short gaps line up. Move the starts and keep growing.
      for (double& s : starts) s = unit(rng);
    }
  }
}

}  // namespace carc
