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

#include <optional>
#include <string>

#include "instance.hpp"
#include "matroid.hpp"
#include "relaxation_solver.hpp"

namespace rrst {

// Checks, in order: X spanning, Y spanning, |X ∩ Y| >= n - 1 - k,
// Z ⊆ X ∩ Y, and the three cost fields. Returns the first failed check.
std::optional<std::string> verify_solution(const Instance& instance,
                                           const Solution& solution);

// Same checks with "basis" in place of "spanning".
std::optional<std::string> verify_solution(const MatroidInstance& instance,
                                           const Solution& solution);

}  // namespace rrst
