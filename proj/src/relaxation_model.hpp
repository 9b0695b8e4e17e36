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

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "exact_lp.hpp"
#include "instance.hpp"
#include "separation.hpp"
#include "solver_state.hpp"

namespace rrst {

// Which variables the program carries. kYOnly is the reduced program used
// once the X side is complete: z is projected out and replaced by the
// aggregated row sum_{E_Z} y_e >= L. kXOnly mirrors it.
enum class ModelShape { kFull, kYOnly, kXOnly };

// A subtour or rank row remembered between iterations. Node sets are stored
// as original vertices so they survive contractions.
struct StoredCut {
  Side side = Side::kX;
  bool node_subset = true;
  std::vector<int> members;
};

struct RelaxationOptions {
  SeparationMode separation = SeparationMode::kMinCut;
  // Add every violated set found per round instead of the most violated one
  // per side.
  bool all_cuts = false;
  std::string lp_dump_path;
  // Absorb cuts by dual simplex from the previous basis instead of
  // re-solving each round from scratch.
  bool warm_start = true;
  int round_limit = 10'000;
};

struct RelaxationModel {
  ModelShape shape = ModelShape::kFull;
  LinearProgram lp;
  std::map<EdgeId, int> var_x;
  std::map<EdgeId, int> var_y;
  std::map<EdgeId, int> var_z;
  int budget = 0;
  SideState x_side;
  SideState y_side;
  std::vector<EdgeId> ez;
  int base_constraints = 0;
  // Row index and origin of every lazy row added so far.
  std::vector<std::pair<int, StoredCut>> lazy_rows;
};

// The LP of one iteration for the given state: objective
//   sum C_e x_e + sum (c_e + d_e) y_e
// with the x/y cardinality rows, the linking rows -x_e + z_e <= 0 and
// z_e - y_e <= 0, and the budget row sum z_e = L. Subtour/rank rows are
// added lazily, starting from `seed` mapped into the current minors.
RelaxationModel build_relaxation(const SolverState& state, const CostMap& costs,
                                 const std::vector<StoredCut>& seed = {});
// Graph-sided and matroid-sided entry points; both check the side kinds.
RelaxationModel build_rrst_lp(const SolverState& state, const CostMap& costs);
RelaxationModel build_rrmb_lp(const SolverState& state, const CostMap& costs);

struct RelaxationPoint {
  VertexSolution vertex;
  EdgeWeights x;
  EdgeWeights y;
  EdgeWeights z;
  Rational objective;
  int rounds = 0;
  int cuts_x = 0;
  int cuts_y = 0;
  std::vector<Rational> round_objectives;
  // Lazy rows tight at the final vertex, for seeding the next iteration.
  std::vector<StoredCut> tight_cuts;
};

// Solve, separate both sides, add violated rows, repeat. The returned vertex
// is optimal for the working rows and satisfies every lazy row, hence it is
// a vertex of the full relaxation. Throws kInfeasibleModel or
// kIterationLimit.
RelaxationPoint cutting_plane_solve(RelaxationModel& model,
                                    const RelaxationOptions& options = {});

// Builds the LP row for a cut against the model's variables.
Constraint cut_row(const RelaxationModel& model, const ViolatedCut& cut);

}  // namespace rrst
