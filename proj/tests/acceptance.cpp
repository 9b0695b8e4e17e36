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

#include <chrono>
#include <cstdio>
#include <algorithm>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "error.hpp"
#include "generator.hpp"
#include "oracle.hpp"
#include "relaxation_solver.hpp"
#include "separation.hpp"
#include "verify.hpp"

namespace rrst {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Observations gathered over every solver run of criteria 1 and 2.
struct Tally {
  int runs = 0;
  int oracle_mismatches = 0;
  int bound_gaps = 0;
  int bookkeeping_violations = 0;
  int witness_failures = 0;
  int no_integral_errors = 0;
  int other_errors = 0;
  int iteration_overruns = 0;
  double max_iterations_per_size = 0;
  int nondeterministic = 0;
  int strict_batch_mismatches = 0;
  std::string first_problem;

  void note(bool bad, int& counter, const std::string& what) {
    if (!bad) return;
    ++counter;
    if (first_problem.empty()) first_problem = what;
  }
};

void inspect(Tally& t, const std::string& name, const Solution& s, int required,
             int size) {
  bool bookkeeping_ok = static_cast<int>(s.Z.size()) == required;
  for (const IterationRecord& r : s.trace) {
    bookkeeping_ok = bookkeeping_ok && r.budget >= 0 && r.budget + r.z_size == required;
    t.note(r.witness_required && !r.witness_found, t.witness_failures, name + ": no witness");
  }
  for (EdgeId e : s.Z) {
    bookkeeping_ok = bookkeeping_ok && std::binary_search(s.X.begin(), s.X.end(), e) &&
                     std::binary_search(s.Y.begin(), s.Y.end(), e);
  }
  t.note(!bookkeeping_ok, t.bookkeeping_violations, name + ": bookkeeping");
  t.note(s.lp_bound != s.total, t.bound_gaps, name + ": lp bound " +
                                                  format_rational(s.lp_bound) + " vs " +
                                                  format_rational(s.total));
  t.note(s.iterations > 4 * size, t.iteration_overruns, name + ": iterations");
  t.max_iterations_per_size =
      std::max(t.max_iterations_per_size, static_cast<double>(s.iterations) / size);
}

// Solves with both fixing modes, checks determinism and returns the batch
// solution, or nothing after recording an error.
template <class Problem, class SolveFn>
std::optional<Solution> solve_all_ways(Tally& t, const std::string& name, const Problem& p,
                                       SolveFn&& solve_fn) {
  ++t.runs;
  try {
    SolverOptions batch;
    SolverOptions strict;
    strict.fixing = FixingMode::kStrict;
    Solution a = solve_fn(p, batch);
    Solution again = solve_fn(p, batch);
    Solution b = solve_fn(p, strict);
    t.note(solution_to_json(a) != solution_to_json(again), t.nondeterministic,
           name + ": repeated solve differs");
    t.note(a.total != b.total, t.strict_batch_mismatches, name + ": strict vs batch");
    if (auto failure = verify_solution(p, a)) {
      t.note(true, t.other_errors, name + ": " + *failure);
    }
    return a;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::kNoIntegralCoordinate) {
      t.note(true, t.no_integral_errors, name + ": " + e.what());
    } else {
      t.note(true, t.other_errors, name + ": " + e.what());
    }
    return std::nullopt;
  }
}

int failures = 0;

void report(int id, const std::string& title, bool pass, const std::string& detail) {
  std::printf("criterion %d %s: %s (%s)\n", id, pass ? "PASS" : "FAIL", title.c_str(),
              detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

std::string fmt(const char* format, auto... args) {
  char buffer[512];
  std::snprintf(buffer, sizeof buffer, format, args...);
  return buffer;
}

Rational tree_weight(const MultiGraph& g, const EdgeWeights& w) {
  Rational total = 0;
  for (EdgeId e : minimum_spanning_tree(g, w)) total += w.at(e);
  return total;
}

std::string problem_suffix(const Tally& t) {
  return t.first_problem.empty() ? "" : "; first: " + t.first_problem;
}

int run() {
  auto solve_tree = [](const Instance& i, const SolverOptions& o) { return solve_rrst(i, o); };
  auto solve_basis = [](const MatroidInstance& i, const SolverOptions& o) {
    return solve_rrmb(i, o);
  };

  // Criterion 1: spanning tree instances against brute force.
  Tally graphs;
  auto start = Clock::now();
  std::vector<SuiteCase> cases = builtin_small_suite(5);
  const size_t builtin = cases.size();
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const int n = 4 + static_cast<int>(seed % 3);
    cases.push_back({"seed" + std::to_string(seed),
                     generate_instance({n, 0.5, static_cast<int>(seed % n), 10, seed})});
  }
  int graphic_mismatches = 0, graphic_same_sets = 0;
  for (const SuiteCase& c : cases) {
    auto s = solve_all_ways(graphs, c.name, c.instance, solve_tree);
    if (!s) continue;
    inspect(graphs, c.name, *s, c.instance.required_overlap(), c.instance.node_count());
    graphs.note(s->total != brute_force_rrst(c.instance).best_cost, graphs.oracle_mismatches,
                c.name + ": oracle disagrees");
    Solution via_matroid = solve_rrmb(graphic_instance(c.instance));
    if (via_matroid.total != s->total) ++graphic_mismatches;
    if (via_matroid.X == s->X && via_matroid.Y == s->Y) ++graphic_same_sets;
  }
  const double graph_seconds = seconds_since(start);
  report(1, "spanning tree solver equals brute force",
         graphs.oracle_mismatches == 0 && graphs.other_errors == 0 && graph_seconds < 300,
         fmt("%zu suite + %zu seeded instances, %d mismatches, %d errors, %.1fs%s", builtin,
             cases.size() - builtin, graphs.oracle_mismatches, graphs.other_errors,
             graph_seconds, problem_suffix(graphs).c_str()));

  // Criterion 2: uniform and partition matroids, plus graphic equivalence.
  Tally matroids;
  start = Clock::now();
  int matroid_instances = 0;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    for (MatroidFamily family : {MatroidFamily::kUniform, MatroidFamily::kPartition}) {
      MatroidInstance base = random_matroid_instance(family, 10, seed);
      for (int k = 0; k <= base.matroid.full_rank(); ++k) {
        MatroidInstance inst = make_matroid_instance(base.matroid, base.costs, k);
        const std::string name = fmt("%s seed %llu k %d",
                                     family == MatroidFamily::kUniform ? "uniform" : "partition",
                                     static_cast<unsigned long long>(seed), k);
        ++matroid_instances;
        auto s = solve_all_ways(matroids, name, inst, solve_basis);
        if (!s) continue;
        inspect(matroids, name, *s, inst.required_overlap(), inst.matroid.full_rank() + 1);
        matroids.note(s->total != brute_force_rrmb(inst).best_cost, matroids.oracle_mismatches,
                      name + ": oracle disagrees");
      }
    }
  }
  const double matroid_seconds = seconds_since(start);
  report(2, "matroid solver equals brute force; graphic path equals tree path",
         matroids.oracle_mismatches == 0 && matroids.other_errors == 0 &&
             graphic_mismatches == 0 && matroid_seconds < 300,
         fmt("%d matroid instances, %d mismatches, %d errors; graphic: %d total differences, "
             "%d/%zu identical (X, Y); %.1fs%s",
             matroid_instances, matroids.oracle_mismatches, matroids.other_errors,
             graphic_mismatches, graphic_same_sets, cases.size(), matroid_seconds,
             problem_suffix(matroids).c_str()));

  const int runs = graphs.runs + matroids.runs;
  report(3, "first LP bound equals the final cost", graphs.bound_gaps + matroids.bound_gaps == 0,
         fmt("%d runs, %d gaps", runs, graphs.bound_gaps + matroids.bound_gaps));
  report(4, "L + |Z| bookkeeping holds every iteration and at termination",
         graphs.bookkeeping_violations + matroids.bookkeeping_violations == 0,
         fmt("%d runs, %d violations", runs,
             graphs.bookkeeping_violations + matroids.bookkeeping_violations));
  report(5, "every vertex with both sides live has a coordinate equal to 1",
         graphs.witness_failures + matroids.witness_failures + graphs.no_integral_errors +
                 matroids.no_integral_errors ==
             0,
         fmt("%d missing witnesses, %d NoIntegralCoordinate errors",
             graphs.witness_failures + matroids.witness_failures,
             graphs.no_integral_errors + matroids.no_integral_errors));
  report(6, "iterations at most 4n",
         graphs.iteration_overruns + matroids.iteration_overruns == 0,
         fmt("max iterations/n = %.3f over graphs, %.3f over matroids (n = rank + 1)",
             graphs.max_iterations_per_size, matroids.max_iterations_per_size));

  // Criterion 7: min-cut separation against exhaustive enumeration.
  start = Clock::now();
  std::mt19937_64 gen(7);
  int disagreements = 0, bad_certificates = 0, violated = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 3 + trial % 6;
    MultiGraph g = generate_instance({n, 0.2 + 0.1 * (trial % 7), 0, 1,
                                      static_cast<std::uint64_t>(10'000 + trial)})
                       .graph;
    const int den = 1 + trial % 6;
    std::uniform_int_distribution<int> numer(0, den);
    EdgeWeights point;
    for (EdgeId e : g.edge_ids()) {
      Rational v(numer(gen), den);
      v.canonicalize();
      point[e] = v;
    }
    auto fast = separate_forest(point, g, SeparationMode::kMinCut);
    auto slow = separate_forest(point, g, SeparationMode::kExhaustive);
    if (fast.has_value() != slow.has_value()) {
      ++disagreements;
      continue;
    }
    if (!fast) continue;
    ++violated;
    for (const ViolatedCut* cut : {&*fast, &*slow}) {
      Rational lhs = 0;
      for (EdgeId e : g.edges_within(cut->subset)) lhs += point.at(e);
      const int size = static_cast<int>(cut->subset.size());
      const bool ok = size >= 2 && size < n && cut->rhs == size - 1 &&
                      cut->support == g.edges_within(cut->subset) &&
                      cut->slack == cut->rhs - lhs && sgn(cut->slack) < 0;
      if (!ok) ++bad_certificates;
    }
  }
  report(7, "min-cut separation agrees with exhaustive subsets",
         disagreements == 0 && bad_certificates == 0,
         fmt("500 points, %d violated, %d verdict disagreements, %d bad certificates, %.2fs",
             violated, disagreements, bad_certificates, seconds_since(start)));

  // Criterion 8: k = 0 and k = n - 1 against minimum spanning trees.
  start = Clock::now();
  int extreme_mismatches = 0, largest = 0;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const int n = 10 + static_cast<int>(seed % 21);
    largest = std::max(largest, n);
    Instance same = generate_instance({n, 0.15, 0, 20, seed});
    if (solve_rrst(same).total != tree_weight(same.graph, same.combined_weights())) {
      ++extreme_mismatches;
    }
    Instance free = generate_instance({n, 0.15, n - 1, 20, seed + 1000});
    const Rational split = tree_weight(free.graph, free.first_stage_weights()) +
                           tree_weight(free.graph, free.second_stage_weights());
    if (solve_rrst(free).total != split) ++extreme_mismatches;
  }
  const double extreme_seconds = seconds_since(start);
  report(8, "k = 0 and k = n - 1 match minimum spanning trees",
         extreme_mismatches == 0 && extreme_seconds < 120,
         fmt("200 instances, n in [10, %d], %d mismatches, %.1fs", largest, extreme_mismatches,
             extreme_seconds));

  report(9, "byte-identical repeats; strict and batch totals equal",
         graphs.nondeterministic + matroids.nondeterministic +
                 graphs.strict_batch_mismatches + matroids.strict_batch_mismatches ==
             0,
         fmt("%d runs, %d nondeterministic, %d strict/batch differences", runs,
             graphs.nondeterministic + matroids.nondeterministic,
             graphs.strict_batch_mismatches + matroids.strict_batch_mismatches));

  std::printf("acceptance: %s\n", failures == 0 ? "all criteria passed" : "FAILED");
  return failures == 0 ? 0 : 1;
}

}  // namespace
}  // namespace rrst

int main() { return rrst::run(); }
