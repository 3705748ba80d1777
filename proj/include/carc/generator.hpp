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

#ifndef CARC_GENERATOR_HPP_
#define CARC_GENERATOR_HPP_

#include <cstdint>

#include "carc/arc_model.hpp"

namespace carc {

// Cycle C_k: arc i spans [2i, 2i+3 mod 2k]. k >= 3 (k = 3 gives a triangle).
ArcModel gen_ring(int k);

// Wheel with k >= 3 outer vertices 0..k-1 (the ring above) and hub k, whose
// arc covers every gap except the one between positions 2k and 2k+1.
ArcModel gen_wheel(int k);

// Complete graph K_n, n >= 3: arc i starts at 2i and covers n+1 gaps (n+2
// for odd n, keeping ends off the even start positions). Every arc covers
// more than half the circle, so all pairs meet.
ArcModel gen_complete(int n);

// Real model with n >= 3 arcs, a pure function of (n, seed).
//
// Draws from std::mt19937_64 seeded with `seed`; a draw x maps to the unit
// interval as (x >> 11) * 2^-53. Per attempt: a maximum length
// lmax = lo + (1 - lo) * u^3 with lo = 2/n, then per arc a start u_s and a
// length lmax * (0.05 + 0.95 * u_l), all as fractions of the circle. The 2n
// endpoints are ranked to positions 0..2n-1. Attempts that leave a gap
// uncovered are redrawn; after 16 misses all lengths of the last draw grow
// by 25% (capped below the full circle) until the model is real. Only
// multiplications and additions are used, so output is byte-identical
// across platforms.
ArcModel gen_random(int n, std::uint64_t seed);

}  // namespace carc

#endif  // CARC_GENERATOR_HPP_
