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

#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "rational.hpp"

namespace rrst {

enum class Relation { kLessEqual, kEqual };

struct Term {
  int var = 0;
  Rational coeff;
};

struct Constraint {
  std::vector<Term> terms;
  Relation relation = Relation::kLessEqual;
  Rational rhs;
  std::string name;
};

struct Variable {
  std::string name;
  bool nonnegative = true;
};

// min c·x subject to a list of ≤ / = rows. Rows are append-only.
class LinearProgram {
 public:
  int add_variable(std::string name, bool nonnegative = true);
  void set_objective(int var, Rational coeff);
  int add_constraint(Constraint constraint);

  int variable_count() const { return static_cast<int>(variables_.size()); }
  const std::vector<Variable>& variables() const { return variables_; }
  const std::vector<Rational>& objective() const { return objective_; }
  const std::vector<Constraint>& constraints() const { return constraints_; }

  // Throws kMalformedProgram on undeclared variables.
  void validate() const;

 private:
  std::vector<Variable> variables_;
  std::vector<Rational> objective_;
  std::vector<Constraint> constraints_;
};

struct BasisEntry {
  enum class Kind { kStructural, kNegativePart, kSlack };
  Kind kind;
  // Variable index for structural/negative parts, row index for slacks.
  int index;

  bool operator==(const BasisEntry&) const = default;
};

struct VertexSolution {
  std::vector<Rational> values;
  // Basic columns in row order of the final tableau.
  std::vector<BasisEntry> basis;
  Rational objective_value;
  int pivots = 0;
};

enum class SolveStatus { kOptimal, kInfeasible, kUnbounded };

struct SolveResult {
  SolveStatus status = SolveStatus::kInfeasible;
  VertexSolution solution;  // meaningful only when kOptimal

  bool optimal() const { return status == SolveStatus::kOptimal; }
};

// Two-phase tableau simplex over exact rationals with Bland's rule for both
// the entering and the leaving column. Deterministic: identical programs
// give identical solutions and bases.
SolveResult solve(const LinearProgram& lp);

// Appends `cut` to `lp` and re-solves from scratch, so the result matches
// solve() on the extended program exactly. Throws kCutNotViolated when
// `prior` already satisfies the cut.
SolveResult add_constraint_and_resolve(LinearProgram& lp, const VertexSolution& prior,
                                       Constraint cut);

// Cutting-plane session. The first program is solved exactly as solve()
// does; every appended ≤ row is absorbed by dual simplex pivots from the
// previous optimal basis (leaving row: infeasible row whose basic column has
// the lowest index; entering column: minimum ratio, lowest index on ties).
// Deterministic, but the vertex reached may differ from a cold solve of the
// extended program.
class LpSession {
 public:
  explicit LpSession(const LinearProgram& lp);
  ~LpSession();
  LpSession(LpSession&&) noexcept;
  LpSession& operator=(LpSession&&) noexcept;

  const SolveResult& result() const { return result_; }
  // `row` is the index of `cut` in the caller's program. Requires an optimal
  // current result.
  const SolveResult& add_cut(const Constraint& cut, int row);

 private:
  struct Impl;
  void refresh();

  std::unique_ptr<Impl> impl_;
  std::vector<Rational> objective_;
  SolveResult result_;
};

Rational activity(const Constraint& c, std::span<const Rational> values);
bool satisfies(const Constraint& c, std::span<const Rational> values);

// Plain-text dump, one line per constraint, rationals as p/q.
void dump_lp(const LinearProgram& lp, std::ostream& out);

}  // namespace rrst
