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

#include "error.hpp"

namespace rrst {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kParse: return "ParseError";
    case ErrorKind::kValidation: return "ValidationError";
    case ErrorKind::kUnknownEdge: return "UnknownEdge";
    case ErrorKind::kElementNotInGround: return "ElementNotInGround";
    case ErrorKind::kNoBasis: return "NoBasis";
    case ErrorKind::kGroundTooLarge: return "GroundTooLarge";
    case ErrorKind::kMalformedProgram: return "MalformedProgram";
    case ErrorKind::kCutNotViolated: return "CutNotViolated";
    case ErrorKind::kInfeasibleModel: return "InfeasibleModel";
    case ErrorKind::kIterationLimit: return "IterationLimit";
    case ErrorKind::kNoIntegralCoordinate: return "NoIntegralCoordinate";
    case ErrorKind::kInvariantBreach: return "InvariantBreach";
    case ErrorKind::kTooManyTrees: return "TooManyTrees";
    case ErrorKind::kIo: return "IoError";
  }
  return "Error";
}

}  // namespace rrst
