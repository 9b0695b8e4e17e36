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

#pragma once

#include <stdexcept>
#include <string>

namespace rrst {

// Every failure raised by the library carries one of these kinds. The C API
// maps them onto stable status codes.
enum class ErrorKind {
  kParse,
  kValidation,
  kUnknownEdge,
  kElementNotInGround,
  kNoBasis,
  kGroundTooLarge,
  kMalformedProgram,
  kCutNotViolated,
  kInfeasibleModel,
  kIterationLimit,
  kNoIntegralCoordinate,
  kInvariantBreach,
  kTooManyTrees,
  kIo,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace rrst
