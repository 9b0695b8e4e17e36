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

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "instance.hpp"
#include "matroid.hpp"
#include "relaxation_model.hpp"
#include "solver_state.hpp"

namespace rrst {

enum class FixingMode {
  // Fix every coordinate equal to 1 in one iteration.
  kBatch,
  // At most one x-fix and one y-fix per iteration.
  kStrict,
};

enum class FinishMode {
  // Once E_Z is empty, complete both sides with greedy minimum bases.
  kGreedy,
  // Keep solving relaxations until both sides are complete.
  kLp,
};

struct SolverOptions {
  FixingMode fixing = FixingMode::kBatch;
  FinishMode finish = FinishMode::kGreedy;
  RelaxationOptions relaxation;
  // Seed each iteration's program with the lazy rows that were tight at the
  // previous vertex.
  bool carry_cuts = true;
};

struct IterationRecord {
  int iteration = 0;
  ModelShape shape = ModelShape::kFull;
  Rational objective;
  int rounds = 0;
  int cuts_x = 0;
  int cuts_y = 0;
  int removed = 0;
  int fixed_x = 0;
  int fixed_y = 0;
  int moved_to_z = 0;
  // Both sides kept live elements after zero removal, so a coordinate equal
  // to 1 had to exist.
  bool witness_required = false;
  bool witness_found = false;
  // State after the iteration.
  int budget = 0;
  int z_size = 0;
  int ex = 0;
  int ey = 0;
  int ez = 0;
};

struct Solution {
  std::vector<EdgeId> X;
  std::vector<EdgeId> Y;
  std::vector<EdgeId> Z;
  Rational first_stage;
  Rational second_stage;
  Rational total;
  Rational lp_bound;
  int iterations = 0;
  int lp_solves = 0;
  int cuts_x = 0;
  int cuts_y = 0;
  std::vector<IterationRecord> trace;
};

// E_X = E_Y = E_Z = E, L = n - 1 - k (rank(E) - k for matroids).
SolverState initial_state(const Instance& instance);
SolverState initial_state(const MatroidInstance& instance);

// One pass of the loop body on the vertex `point` of `state`'s relaxation:
// (a) drop zero coordinates from E_Z, E_X, E_Y; (b) fix x = 1 elements into X
// by contraction; (c) same for y; (d) move E_Z ∩ X ∩ Y into Z, decrementing
// L. Throws kNoIntegralCoordinate when nothing could be fixed although both
// sides are still live.
SolverState iterate_once(const SolverState& state, const RelaxationPoint& point,
                         FixingMode mode, IterationRecord* record = nullptr);

// Completes both sides with minimum bases of the remaining minors (C on the
// X side, c + d on the Y side). Requires E_Z empty. Returns the added sets.
std::pair<std::vector<EdgeId>, std::vector<EdgeId>> finish_integral(
    SolverState& state, const CostMap& costs);

Solution solve_rrst(const Instance& instance, const SolverOptions& options = {});
Solution solve_rrmb(const MatroidInstance& instance, const SolverOptions& options = {});

// {"X": [...], "Y": [...], "Z": [...], "first_stage": "p/q", ...}
std::string solution_to_json(const Solution& solution);
// Reads the fields written by solution_to_json (trace and counters are not
// serialized).
Solution solution_from_json(std::string_view text);

}  // namespace rrst
