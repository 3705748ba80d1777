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

#include "carc/error.hpp"

namespace carc {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUnknownElement: return "unknown_element";
    case ErrorCode::kMalformedInput: return "malformed_input";
    case ErrorCode::kDuplicateEndpoint: return "duplicate_endpoint";
    case ErrorCode::kPositionOutOfRange: return "position_out_of_range";
    case ErrorCode::kDegenerateArc: return "degenerate_arc";
    case ErrorCode::kNotRealCircularArc: return "not_real_circular_arc";
    case ErrorCode::kUnreachable: return "unreachable";
    case ErrorCode::kUndefinedComparison: return "undefined_comparison";
    case ErrorCode::kContractViolation: return "contract_violation";
    case ErrorCode::kInvalidArgument: return "invalid_argument";
    case ErrorCode::kStructural: return "structural";
    case ErrorCode::kRouteFailure: return "route_failure";
    case ErrorCode::kLimitExceeded: return "limit_exceeded";
    case ErrorCode::kInternal: return "internal";
  }
  return "unknown";
}

}  // namespace carc
