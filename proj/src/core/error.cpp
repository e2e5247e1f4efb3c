// Copyright 2026 The mfspec Authors.
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

#include "core/error.hpp"

namespace mfspec {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NotIrreducible: return "NotIrreducible";
    case ErrorCode::EmptyRow: return "EmptyRow";
    case ErrorCode::NotMarkov: return "NotMarkov";
    case ErrorCode::ResourceLimit: return "ResourceLimit";
    case ErrorCode::DepthMismatch: return "DepthMismatch";
    case ErrorCode::NonConvergence: return "NonConvergence";
    case ErrorCode::ConditionQViolated: return "ConditionQViolated";
    case ErrorCode::ConditionPViolated: return "ConditionPViolated";
    case ErrorCode::Infeasible: return "Infeasible";
    case ErrorCode::ExcludedAlpha: return "ExcludedAlpha";
    case ErrorCode::UnknownFormula: return "UnknownFormula";
  }
  return "Unknown";
}

void fail(ErrorCode code, const std::string& message) {
  throw Error(code, std::string(to_string(code)) + ": " + message);
}

}  // namespace mfspec
