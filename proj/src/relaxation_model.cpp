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

#include "relaxation_model.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <set>
#include <string>

#include "error.hpp"

namespace rrst {
namespace {

std::string var_name(char prefix, EdgeId e) {
  return std::string(1, prefix) + std::to_string(e.value);
}

Constraint sum_row(const std::map<EdgeId, int>& vars, Relation relation,
                   Rational rhs, std::string name, const Rational& coeff = 1) {
  Constraint row;
  for (const auto& [e, var] : vars) row.terms.push_back(Term{var, coeff});
  row.relation = relation;
  row.rhs = std::move(rhs);
  row.name = std::move(name);
  return row;
}

bool has_x(ModelShape shape) { return shape != ModelShape::kYOnly; }
bool has_y(ModelShape shape) { return shape != ModelShape::kXOnly; }

const SideState& side_of(const RelaxationModel& model, Side side) {
  return side == Side::kX ? model.x_side : model.y_side;
}

const std::map<EdgeId, int>& vars_of(const RelaxationModel& model, Side side) {
  return side == Side::kX ? model.var_x : model.var_y;
}

StoredCut remember(const SideState& side_state, const ViolatedCut& cut) {
  StoredCut stored{cut.side, cut.node_subset, {}};
  if (cut.node_subset) {
    const MultiGraph& g = side_state.graph();
    std::vector<char> inside(g.node_count(), 0);
    for (int node : cut.subset) inside[node] = 1;
    for (int v = 0; v < g.original_vertex_count(); ++v) {
      if (inside[g.node_of_original(v)]) stored.members.push_back(v);
    }
  } else {
    stored.members = cut.subset;
  }
  return stored;
}

// Maps a remembered row into the current minor of its side.
std::optional<ViolatedCut> recall(const SideState& side_state, const StoredCut& stored) {
  ViolatedCut cut;
  cut.side = stored.side;
  cut.node_subset = stored.node_subset;
  if (stored.node_subset) {
    if (!side_state.is_graph()) return std::nullopt;
    const MultiGraph& g = side_state.graph();
    std::set<int> nodes;
    for (int v : stored.members) nodes.insert(g.node_of_original(v));
    if (nodes.size() < 2 || static_cast<int>(nodes.size()) >= g.node_count()) {
      return std::nullopt;
    }
    cut.subset.assign(nodes.begin(), nodes.end());
    cut.support = g.edges_within(cut.subset);
    cut.rhs = static_cast<int>(nodes.size()) - 1;
  } else {
    if (side_state.is_graph()) return std::nullopt;
    const Matroid& m = side_state.matroid();
    for (int id : stored.members) {
      if (m.contains(EdgeId{id})) {
        cut.subset.push_back(id);
        cut.support.push_back(EdgeId{id});
      }
    }
    if (cut.support.empty() || cut.support.size() == m.ground().size()) {
      return std::nullopt;
    }
    cut.rhs = m.rank(cut.support);
  }
  if (cut.support.empty()) return std::nullopt;
  return cut;
}

std::vector<ViolatedCut> separate_side(const SideState& side_state, Side side,
                                       const EdgeWeights& point, SeparationMode mode) {
  std::vector<ViolatedCut> cuts =
      side_state.is_graph() ? forest_cuts(point, side_state.graph(), mode)
                            : rank_cuts(point, side_state.matroid(), mode);
  for (ViolatedCut& c : cuts) c.side = side;
  return cuts;
}

EdgeWeights point_of(const std::map<EdgeId, int>& vars,
                     const std::vector<Rational>& values) {
  EdgeWeights point;
  for (const auto& [e, var] : vars) point.emplace(e, values[var]);
  return point;
}

// z is cost-free in the reduced programs: fill it greedily in EdgeId order
// up to each element's bound from the remaining side.
EdgeWeights reconstruct_z(const RelaxationModel& model, const EdgeWeights& bounds) {
  EdgeWeights z;
  Rational remaining = model.budget;
  for (EdgeId e : model.ez) {
    Rational value = remaining;
    if (auto it = bounds.find(e); it != bounds.end() && it->second < value) {
      value = it->second;
    }
    z.emplace(e, value);
    remaining -= value;
  }
  if (sgn(remaining) != 0) {
    throw Error(ErrorKind::kInvariantBreach, "z reconstruction missed the budget");
  }
  return z;
}

}  // namespace

RelaxationModel build_relaxation(const SolverState& state, const CostMap& costs,
                                 const std::vector<StoredCut>& seed) {
  RelaxationModel model;
  if (state.x.complete() && state.y.complete()) {
    throw Error(ErrorKind::kInvariantBreach, "no relaxation left to build");
  }
  model.shape = state.x.complete()   ? ModelShape::kYOnly
                : state.y.complete() ? ModelShape::kXOnly
                                     : ModelShape::kFull;
  model.budget = state.budget;
  model.x_side = state.x;
  model.y_side = state.y;
  model.ez = state.ez;
  LinearProgram& lp = model.lp;

  if (has_x(model.shape)) {
    for (EdgeId e : state.x.elements()) {
      int var = lp.add_variable(var_name('x', e));
      lp.set_objective(var, costs.at(e).C);
      model.var_x.emplace(e, var);
    }
  }
  if (model.shape == ModelShape::kFull) {
    for (EdgeId e : state.ez) model.var_z.emplace(e, lp.add_variable(var_name('z', e)));
  }
  if (has_y(model.shape)) {
    for (EdgeId e : state.y.elements()) {
      int var = lp.add_variable(var_name('y', e));
      lp.set_objective(var, costs.at(e).worst_second_stage());
      model.var_y.emplace(e, var);
    }
  }

  if (has_x(model.shape)) {
    lp.add_constraint(
        sum_row(model.var_x, Relation::kEqual, state.x.target(), "card_x"));
  }
  if (model.shape == ModelShape::kFull) {
    for (const auto& [e, zvar] : model.var_z) {
      if (auto it = model.var_x.find(e); it != model.var_x.end()) {
        lp.add_constraint(Constraint{{{it->second, -1}, {zvar, 1}},
                                     Relation::kLessEqual, 0, var_name('l', e) + "_xz"});
      }
    }
    if (!model.var_z.empty() || state.budget != 0) {
      lp.add_constraint(sum_row(model.var_z, Relation::kEqual, state.budget, "budget"));
    }
    for (const auto& [e, zvar] : model.var_z) {
      if (auto it = model.var_y.find(e); it != model.var_y.end()) {
        lp.add_constraint(Constraint{{{zvar, 1}, {it->second, -1}},
                                     Relation::kLessEqual, 0, var_name('l', e) + "_zy"});
      }
    }
  } else {
    // sum_{E_Z} w_e >= L, valid only when every z_e is bounded by a live
    // variable of the remaining side.
    const auto& vars = model.shape == ModelShape::kYOnly ? model.var_y : model.var_x;
    bool bounded = std::all_of(state.ez.begin(), state.ez.end(),
                               [&](EdgeId e) { return vars.contains(e); });
    if (bounded && (!state.ez.empty() || state.budget != 0)) {
      Constraint row;
      for (EdgeId e : state.ez) row.terms.push_back(Term{vars.at(e), -1});
      row.relation = Relation::kLessEqual;
      row.rhs = -state.budget;
      row.name = "overlap";
      lp.add_constraint(std::move(row));
    }
  }
  if (has_y(model.shape)) {
    lp.add_constraint(
        sum_row(model.var_y, Relation::kEqual, state.y.target(), "card_y"));
  }
  model.base_constraints = static_cast<int>(lp.constraints().size());

  std::set<std::pair<int, std::vector<int>>> seen;
  for (const StoredCut& stored : seed) {
    if (stored.side == Side::kX ? !has_x(model.shape) : !has_y(model.shape)) continue;
    auto cut = recall(side_of(model, stored.side), stored);
    if (!cut) continue;
    if (!seen.emplace(static_cast<int>(cut->side), cut->subset).second) continue;
    model.lazy_rows.emplace_back(static_cast<int>(lp.constraints().size()),
                                 remember(side_of(model, cut->side), *cut));
    lp.add_constraint(cut_row(model, *cut));
  }
  return model;
}

RelaxationModel build_rrst_lp(const SolverState& state, const CostMap& costs) {
  if (!state.x.is_graph() || !state.y.is_graph()) {
    throw Error(ErrorKind::kInvariantBreach, "spanning tree model needs graph sides");
  }
  return build_relaxation(state, costs);
}

RelaxationModel build_rrmb_lp(const SolverState& state, const CostMap& costs) {
  if (state.x.is_graph() || state.y.is_graph()) {
    throw Error(ErrorKind::kInvariantBreach, "matroid model needs matroid sides");
  }
  return build_relaxation(state, costs);
}

Constraint cut_row(const RelaxationModel& model, const ViolatedCut& cut) {
  const auto& vars = vars_of(model, cut.side);
  Constraint row;
  for (EdgeId e : cut.support) {
    auto it = vars.find(e);
    if (it == vars.end()) {
      throw Error(ErrorKind::kInvariantBreach,
                  "cut mentions element " + std::to_string(e.value) + " without a variable");
    }
    row.terms.push_back(Term{it->second, 1});
  }
  row.relation = Relation::kLessEqual;
  row.rhs = cut.rhs;
  row.name = (cut.side == Side::kX ? "sub_x" : "sub_y") +
             std::to_string(model.lp.constraints().size());
  return row;
}

RelaxationPoint cutting_plane_solve(RelaxationModel& model,
                                    const RelaxationOptions& options) {
  RelaxationPoint out;
  std::optional<LpSession> session;
  std::vector<int> pending;
  for (int round = 0;; ++round) {
    if (round >= options.round_limit) {
      throw Error(ErrorKind::kIterationLimit, "cutting-plane round limit reached");
    }
    SolveResult result;
    if (!options.warm_start) {
      result = solve(model.lp);
    } else if (!session) {
      session.emplace(model.lp);
      result = session->result();
    } else {
      for (int row : pending) result = session->add_cut(model.lp.constraints()[row], row);
    }
    pending.clear();
    if (!options.lp_dump_path.empty()) {
      std::ofstream dump(options.lp_dump_path, std::ios::app);
      dump << "# round " << round << "\n";
      dump_lp(model.lp, dump);
    }
    if (!result.optimal()) {
      throw Error(ErrorKind::kInfeasibleModel,
                  result.status == SolveStatus::kInfeasible ? "relaxation is infeasible"
                                                            : "relaxation is unbounded");
    }
    const Rational& objective = result.solution.objective_value;
    if (!out.round_objectives.empty() && objective < out.round_objectives.back()) {
      throw Error(ErrorKind::kInvariantBreach, "cutting-plane objective decreased");
    }
    out.round_objectives.push_back(objective);
    ++out.rounds;

    EdgeWeights x = point_of(model.var_x, result.solution.values);
    EdgeWeights y = point_of(model.var_y, result.solution.values);
    std::vector<ViolatedCut> found;
    for (Side side : {Side::kX, Side::kY}) {
      if (side == Side::kX ? !has_x(model.shape) : !has_y(model.shape)) continue;
      std::vector<ViolatedCut> cuts = separate_side(
          side_of(model, side), side, side == Side::kX ? x : y, options.separation);
      if (cuts.empty()) continue;
      if (!options.all_cuts) cuts.resize(1);
      (side == Side::kX ? out.cuts_x : out.cuts_y) += static_cast<int>(cuts.size());
      for (ViolatedCut& c : cuts) found.push_back(std::move(c));
    }
    if (found.empty()) {
      out.vertex = std::move(result.solution);
      out.objective = out.vertex.objective_value;
      out.x = std::move(x);
      out.y = std::move(y);
      switch (model.shape) {
        case ModelShape::kFull:
          out.z = point_of(model.var_z, out.vertex.values);
          break;
        case ModelShape::kYOnly:
          out.z = reconstruct_z(model, out.y);
          break;
        case ModelShape::kXOnly:
          out.z = reconstruct_z(model, out.x);
          break;
      }
      const auto& rows = model.lp.constraints();
      for (const auto& [row, stored] : model.lazy_rows) {
        if (activity(rows[row], out.vertex.values) == rows[row].rhs) {
          out.tight_cuts.push_back(stored);
        }
      }
      return out;
    }
    for (const ViolatedCut& cut : found) {
      model.lazy_rows.emplace_back(static_cast<int>(model.lp.constraints().size()),
                                   remember(side_of(model, cut.side), cut));
      pending.push_back(model.lp.add_constraint(cut_row(model, cut)));
    }
  }
}

}  // namespace rrst
