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

#include "relaxation_solver.hpp"

#include <algorithm>
#include <string>

#include "error.hpp"

namespace rrst {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

Rational value_of(const EdgeWeights& point, EdgeId e) {
  auto it = point.find(e);
  return it == point.end() ? Rational(0) : it->second;
}

std::vector<EdgeId> unit_coordinates(const SideState& side, const EdgeWeights& point) {
  std::vector<EdgeId> ones;
  for (EdgeId e : side.elements()) {
    if (is_one(value_of(point, e))) ones.push_back(e);
  }
  return ones;
}

void fix_all(SideState& side, const std::vector<EdgeId>& ones, FixingMode mode,
             int* count) {
  for (EdgeId e : ones) {
    if (!side.contains(e)) {
      throw Error(ErrorKind::kInvariantBreach,
                  "element " + std::to_string(e.value) + " vanished before fixing");
    }
    if (!side.is_graph()) {
      const EdgeId single[] = {e};
      if (side.matroid().rank(single) == 0) {
        throw Error(ErrorKind::kInvariantBreach,
                    "loop " + std::to_string(e.value) + " carries value 1");
      }
    }
    side.fix(e);
    ++*count;
    if (mode == FixingMode::kStrict) break;
  }
}

void check_bookkeeping(const SolverState& state) {
  if (state.budget < 0) {
    throw Error(ErrorKind::kInvariantBreach, "overlap budget L went negative");
  }
  if (state.budget + static_cast<int>(state.z.size()) != state.required_overlap) {
    throw Error(ErrorKind::kInvariantBreach, "L + |Z| drifted from n - 1 - k");
  }
  for (EdgeId e : state.z) {
    if (!state.x.has_chosen(e) || !state.y.has_chosen(e)) {
      throw Error(ErrorKind::kInvariantBreach, "Z is not contained in X ∩ Y");
    }
  }
  for (EdgeId e : state.ez) {
    if (state.x.has_chosen(e) && state.y.has_chosen(e)) {
      throw Error(ErrorKind::kInvariantBreach, "E_Z still meets X ∩ Y");
    }
  }
}

EdgeWeights side_weights(const SideState& side, const CostMap& costs, Side which) {
  EdgeWeights w;
  for (EdgeId e : side.elements()) {
    const CostTriple& t = costs.at(e);
    w.emplace(e, which == Side::kX ? t.C : t.worst_second_stage());
  }
  return w;
}

std::vector<EdgeId> complete_side(SideState& side, const CostMap& costs, Side which) {
  EdgeWeights w = side_weights(side, costs, which);
  std::vector<EdgeId> basis = side.is_graph() ? minimum_spanning_tree(side.graph(), w)
                                              : greedy_min_basis(side.matroid(), w);
  for (EdgeId e : basis) side.fix(e);
  // What remains of a matroid after contracting a basis is loops only.
  for (EdgeId e : side.elements()) side.remove(e);
  return basis;
}

size_t overlap(const std::vector<EdgeId>& a, const std::vector<EdgeId>& b) {
  std::vector<EdgeId> common;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(common));
  return common.size();
}

template <class Feasible>
Solution run(SolverState state, const CostMap& costs, const SolverOptions& options,
             int element_count, Feasible&& is_basis) {
  Solution solution;
  std::vector<StoredCut> seed;
  bool solved_any = false;
  const int iteration_limit = 4 * (element_count + state.required_overlap) + 16;
  check_bookkeeping(state);
  while (!(state.x.complete() && state.y.complete())) {
    if (state.ez.empty() && options.finish == FinishMode::kGreedy && solved_any) {
      finish_integral(state, costs);
      break;
    }
    if (solution.iterations >= iteration_limit) {
      throw Error(ErrorKind::kIterationLimit, "iterative relaxation did not terminate");
    }
    RelaxationModel model = build_relaxation(
        state, costs, options.carry_cuts ? seed : std::vector<StoredCut>{});
    RelaxationPoint point = cutting_plane_solve(model, options.relaxation);
    if (!solved_any) {
      solution.lp_bound = point.objective;
      solved_any = true;
    }
    IterationRecord record;
    record.iteration = solution.iterations + 1;
    record.shape = model.shape;
    record.objective = point.objective;
    record.rounds = point.rounds;
    record.cuts_x = point.cuts_x;
    record.cuts_y = point.cuts_y;
    state = iterate_once(state, point, options.fixing, &record);
    check_bookkeeping(state);
    solution.trace.push_back(record);
    solution.lp_solves += point.rounds;
    solution.cuts_x += point.cuts_x;
    solution.cuts_y += point.cuts_y;
    ++solution.iterations;
    seed = std::move(point.tight_cuts);
  }

  check_bookkeeping(state);
  if (state.budget != 0) {
    throw Error(ErrorKind::kInvariantBreach, "terminated with L > 0");
  }
  solution.X = state.x.chosen();
  solution.Y = state.y.chosen();
  solution.Z = state.z;
  if (!is_basis(solution.X)) throw Error(ErrorKind::kInvariantBreach, "X is not a basis");
  if (!is_basis(solution.Y)) throw Error(ErrorKind::kInvariantBreach, "Y is not a basis");
  if (static_cast<int>(overlap(solution.X, solution.Y)) < state.required_overlap) {
    throw Error(ErrorKind::kInvariantBreach, "|X ∩ Y| below the required overlap");
  }
  for (EdgeId e : solution.X) solution.first_stage += costs.at(e).C;
  for (EdgeId e : solution.Y) solution.second_stage += costs.at(e).worst_second_stage();
  solution.total = solution.first_stage + solution.second_stage;
  return solution;
}

json id_array(const std::vector<EdgeId>& ids) {
  json out = json::array();
  for (EdgeId e : ids) out.push_back(e.value);
  return out;
}

}  // namespace

SolverState initial_state(const Instance& instance) {
  SolverState state;
  state.x = SideState(instance.graph);
  state.y = SideState(instance.graph);
  state.ez = instance.graph.edge_ids();
  state.required_overlap = instance.required_overlap();
  state.budget = state.required_overlap;
  return state;
}

SolverState initial_state(const MatroidInstance& instance) {
  SolverState state;
  state.x = SideState(instance.matroid);
  state.y = SideState(instance.matroid);
  state.ez = instance.matroid.ground();
  state.required_overlap = instance.required_overlap();
  state.budget = state.required_overlap;
  return state;
}

SolverState iterate_once(const SolverState& state, const RelaxationPoint& point,
                         FixingMode mode, IterationRecord* record) {
  SolverState next = state;
  IterationRecord local;
  IterationRecord& rec = record ? *record : local;
  const bool x_live_before = !state.x.elements().empty();
  const bool y_live_before = !state.y.elements().empty();

  // (a) zero removal, E_Z first.
  next.ez.clear();
  for (EdgeId e : state.ez) {
    if (sgn(value_of(point.z, e)) != 0) {
      next.ez.push_back(e);
    } else {
      ++rec.removed;
    }
  }
  for (EdgeId e : state.x.elements()) {
    if (sgn(value_of(point.x, e)) == 0) {
      next.x.remove(e);
      ++rec.removed;
    }
  }
  for (EdgeId e : state.y.elements()) {
    if (sgn(value_of(point.y, e)) == 0) {
      next.y.remove(e);
      ++rec.removed;
    }
  }
  const bool x_live = !next.x.elements().empty();
  const bool y_live = !next.y.elements().empty();
  rec.witness_required =
      (x_live || y_live) && (x_live || !x_live_before) && (y_live || !y_live_before);

  // (b), (c) fixing by contraction.
  fix_all(next.x, unit_coordinates(next.x, point.x), mode, &rec.fixed_x);
  fix_all(next.y, unit_coordinates(next.y, point.y), mode, &rec.fixed_y);
  rec.witness_found = rec.fixed_x + rec.fixed_y > 0;
  if (rec.witness_required && !rec.witness_found) {
    throw Error(ErrorKind::kNoIntegralCoordinate,
                "vertex has no coordinate equal to 1 after zero removal (iteration " +
                    std::to_string(state.iteration + 1) + ")");
  }

  // (d) Z bookkeeping. With L = 0 the budget row forces z = 0, so such
  // elements simply leave E_Z.
  std::vector<EdgeId> remaining;
  for (EdgeId e : next.ez) {
    if (!(next.x.has_chosen(e) && next.y.has_chosen(e))) {
      remaining.push_back(e);
      continue;
    }
    if (next.budget > 0) {
      next.z.insert(std::lower_bound(next.z.begin(), next.z.end(), e), e);
      --next.budget;
      ++rec.moved_to_z;
    }
  }
  next.ez = std::move(remaining);
  ++next.iteration;

  rec.budget = next.budget;
  rec.z_size = static_cast<int>(next.z.size());
  rec.ex = static_cast<int>(next.x.elements().size());
  rec.ey = static_cast<int>(next.y.elements().size());
  rec.ez = static_cast<int>(next.ez.size());
  return next;
}

std::pair<std::vector<EdgeId>, std::vector<EdgeId>> finish_integral(
    SolverState& state, const CostMap& costs) {
  if (!state.ez.empty()) {
    throw Error(ErrorKind::kInvariantBreach, "finish_integral needs E_Z empty");
  }
  std::vector<EdgeId> added_x = complete_side(state.x, costs, Side::kX);
  std::vector<EdgeId> added_y = complete_side(state.y, costs, Side::kY);
  return {std::move(added_x), std::move(added_y)};
}

Solution solve_rrst(const Instance& instance, const SolverOptions& options) {
  return run(initial_state(instance), instance.costs, options, instance.edge_count(),
             [&](const std::vector<EdgeId>& tree) {
               return is_spanning_tree(instance.graph, tree);
             });
}

Solution solve_rrmb(const MatroidInstance& instance, const SolverOptions& options) {
  const int r = instance.matroid.full_rank();
  return run(initial_state(instance), instance.costs, options,
             static_cast<int>(instance.matroid.ground().size()),
             [&](const std::vector<EdgeId>& basis) {
               return static_cast<int>(basis.size()) == r &&
                      instance.matroid.is_independent(basis);
             });
}

std::string solution_to_json(const Solution& solution) {
  ordered_json doc;
  doc["X"] = id_array(solution.X);
  doc["Y"] = id_array(solution.Y);
  doc["Z"] = id_array(solution.Z);
  doc["first_stage"] = format_rational(solution.first_stage);
  doc["second_stage"] = format_rational(solution.second_stage);
  doc["total"] = format_rational(solution.total);
  doc["lp_bound"] = format_rational(solution.lp_bound);
  doc["iterations"] = solution.iterations;
  return doc.dump();
}

Solution solution_from_json(std::string_view text) {
  Solution out;
  try {
    json doc = json::parse(text);
    auto ids = [&](const char* key) {
      std::vector<EdgeId> list;
      for (const json& v : doc.at(key)) list.push_back(EdgeId{v.get<int>()});
      std::sort(list.begin(), list.end());
      return list;
    };
    out.X = ids("X");
    out.Y = ids("Y");
    out.Z = doc.contains("Z") ? ids("Z") : std::vector<EdgeId>{};
    out.first_stage = parse_cost(doc.at("first_stage"));
    out.second_stage = parse_cost(doc.at("second_stage"));
    out.total = parse_cost(doc.at("total"));
    if (doc.contains("lp_bound")) out.lp_bound = parse_cost(doc.at("lp_bound"));
    if (doc.contains("iterations")) out.iterations = doc.at("iterations").get<int>();
  } catch (const json::exception& ex) {
    throw Error(ErrorKind::kParse, ex.what());
  }
  return out;
}

}  // namespace rrst
