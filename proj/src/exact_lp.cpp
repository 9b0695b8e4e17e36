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

#include "exact_lp.hpp"

#include <algorithm>
#include <ostream>
#include <string>

#include "error.hpp"
#include "small_rational.hpp"

namespace rrst {

int LinearProgram::add_variable(std::string name, bool nonnegative) {
  variables_.push_back(Variable{std::move(name), nonnegative});
  objective_.emplace_back(0);
  return static_cast<int>(variables_.size()) - 1;
}

void LinearProgram::set_objective(int var, Rational coeff) {
  if (var < 0 || var >= variable_count()) {
    throw Error(ErrorKind::kMalformedProgram,
                "objective references undeclared variable " + std::to_string(var));
  }
  objective_[var] = std::move(coeff);
}

int LinearProgram::add_constraint(Constraint constraint) {
  for (const Term& t : constraint.terms) {
    if (t.var < 0 || t.var >= variable_count()) {
      throw Error(ErrorKind::kMalformedProgram,
                  "constraint \"" + constraint.name +
                      "\" references undeclared variable " + std::to_string(t.var));
    }
  }
  constraints_.push_back(std::move(constraint));
  return static_cast<int>(constraints_.size()) - 1;
}

void LinearProgram::validate() const {
  if (objective_.size() != variables_.size()) {
    throw Error(ErrorKind::kMalformedProgram, "objective size mismatch");
  }
  for (const Constraint& c : constraints_) {
    for (const Term& t : c.terms) {
      if (t.var < 0 || t.var >= variable_count()) {
        throw Error(ErrorKind::kMalformedProgram,
                    "constraint \"" + c.name + "\" references undeclared variable");
      }
    }
  }
}

Rational activity(const Constraint& c, std::span<const Rational> values) {
  Rational sum = 0;
  for (const Term& t : c.terms) sum += t.coeff * values[t.var];
  return sum;
}

bool satisfies(const Constraint& c, std::span<const Rational> values) {
  Rational lhs = activity(c, values);
  return c.relation == Relation::kEqual ? lhs == c.rhs : lhs <= c.rhs;
}

namespace {

enum class ColumnKind { kStructural, kNegativePart, kSlack, kArtificial };

struct Column {
  ColumnKind kind;
  int index;  // variable or row
};

constexpr long kPivotLimit = 50'000'000;

template <class T>
T convert(const Rational& value);

template <>
Rational convert<Rational>(const Rational& value) {
  return value;
}

template <>
SmallRational convert<SmallRational>(const Rational& value) {
  return SmallRational::from(value);
}

Rational to_exact(const Rational& value) { return value; }
Rational to_exact(const SmallRational& value) { return value.to_rational(); }

// Dense tableau in canonical form for the current basis. Row operations skip
// zero entries of the pivot row, which keeps the cost close to the number of
// non-zeros on these sparse combinatorial programs.
template <class T>
class Tableau {
 public:
  explicit Tableau(const LinearProgram& lp) {
    const int nv = lp.variable_count();
    for (int v = 0; v < nv; ++v) columns_.push_back({ColumnKind::kStructural, v});
    for (int v = 0; v < nv; ++v) {
      if (!lp.variables()[v].nonnegative) {
        negative_column_.resize(nv, -1);
        negative_column_[v] = static_cast<int>(columns_.size());
        columns_.push_back({ColumnKind::kNegativePart, v});
      }
    }
    const auto& cons = lp.constraints();
    std::vector<int> slack_col(cons.size(), -1);
    for (size_t i = 0; i < cons.size(); ++i) {
      if (cons[i].relation == Relation::kLessEqual) {
        slack_col[i] = static_cast<int>(columns_.size());
        columns_.push_back({ColumnKind::kSlack, static_cast<int>(i)});
      }
    }
    std::vector<int> art_col(cons.size(), -1);
    std::vector<char> flip(cons.size(), 0);
    for (size_t i = 0; i < cons.size(); ++i) {
      flip[i] = sgn(cons[i].rhs) < 0;
      if (cons[i].relation == Relation::kEqual || flip[i]) {
        art_col[i] = static_cast<int>(columns_.size());
        columns_.push_back({ColumnKind::kArtificial, static_cast<int>(i)});
      }
    }
    const int nc = static_cast<int>(columns_.size());
    a_.assign(cons.size(), std::vector<T>(nc));
    rhs_.resize(cons.size());
    basis_.resize(cons.size());
    for (size_t i = 0; i < cons.size(); ++i) {
      auto& row = a_[i];
      for (const Term& t : cons[i].terms) {
        row[t.var] += convert<T>(t.coeff);
        if (!negative_column_.empty() && negative_column_[t.var] >= 0) {
          row[negative_column_[t.var]] -= convert<T>(t.coeff);
        }
      }
      if (slack_col[i] >= 0) row[slack_col[i]] = 1;
      rhs_[i] = convert<T>(cons[i].rhs);
      if (flip[i]) {
        for (T& v : row) {
          if (sgn(v) != 0) v = -v;
        }
        rhs_[i] = -rhs_[i];
      }
      if (art_col[i] >= 0) {
        row[art_col[i]] = 1;
        basis_[i] = art_col[i];
      } else {
        basis_[i] = slack_col[i];
      }
    }
    cost_.resize(nc);
    for (int j = 0; j < nc; ++j) {
      if (columns_[j].kind == ColumnKind::kStructural) {
        cost_[j] = convert<T>(lp.objective()[columns_[j].index]);
      } else if (columns_[j].kind == ColumnKind::kNegativePart) {
        cost_[j] = -convert<T>(lp.objective()[columns_[j].index]);
      }
    }
    reduced_.resize(nc);
  }

  // Returns false when the program is infeasible.
  bool phase_one() {
    const int nc = static_cast<int>(columns_.size());
    for (int j = 0; j < nc; ++j) reduced_[j] = 0;
    value_ = 0;
    bool any = false;
    for (size_t i = 0; i < a_.size(); ++i) {
      if (!is_artificial(basis_[i])) continue;
      any = true;
      for (int j = 0; j < nc; ++j) {
        if (!is_artificial(j) && sgn(a_[i][j]) != 0) reduced_[j] -= a_[i][j];
      }
      value_ += rhs_[i];
    }
    if (!any) return true;
    allow_artificial_ = true;
    if (!iterate()) {
      throw Error(ErrorKind::kInvariantBreach, "phase one reported unbounded");
    }
    if (sgn(value_) != 0) return false;
    allow_artificial_ = false;
    // Degenerate artificials left in the basis: pivot them out on any
    // non-artificial column, or drop the row when it is redundant.
    for (size_t i = 0; i < a_.size();) {
      if (!is_artificial(basis_[i])) {
        ++i;
        continue;
      }
      int q = -1;
      for (int j = 0; j < nc; ++j) {
        if (!is_artificial(j) && sgn(a_[i][j]) != 0) {
          q = j;
          break;
        }
      }
      if (q < 0) {
        a_.erase(a_.begin() + i);
        rhs_.erase(rhs_.begin() + i);
        basis_.erase(basis_.begin() + i);
        continue;
      }
      pivot(static_cast<int>(i), q);
      ++i;
    }
    drop_artificials();
    return true;
  }

  // Appends a ≤ row with a fresh basic slack, expressed in the current basis.
  void add_row(const Constraint& c, int row_index) {
    const int slack = static_cast<int>(columns_.size());
    columns_.push_back({ColumnKind::kSlack, row_index});
    for (auto& row : a_) row.emplace_back(0);
    cost_.emplace_back(0);
    reduced_.emplace_back(0);
    std::vector<T> row(columns_.size());
    for (const Term& t : c.terms) {
      row[t.var] += convert<T>(t.coeff);
      if (!negative_column_.empty() && negative_column_[t.var] >= 0) {
        row[negative_column_[t.var]] -= convert<T>(t.coeff);
      }
    }
    row[slack] = 1;
    T rhs = convert<T>(c.rhs);
    T f;
    for (size_t i = 0; i < a_.size(); ++i) {
      const int b = basis_[i];
      if (sgn(row[b]) == 0) continue;
      f = row[b];
      const auto& source = a_[i];
      for (size_t j = 0; j < source.size(); ++j) {
        if (sgn(source[j]) != 0) row[j] -= f * source[j];
      }
      rhs -= f * rhs_[i];
    }
    a_.push_back(std::move(row));
    rhs_.push_back(std::move(rhs));
    basis_.push_back(slack);
  }

  // Dual simplex from a dual feasible basis. Returns false when the program
  // is infeasible.
  bool dual_iterate() {
    const int nc = static_cast<int>(columns_.size());
    while (true) {
      int r = -1;
      for (size_t i = 0; i < a_.size(); ++i) {
        if (sgn(rhs_[i]) < 0 && (r < 0 || basis_[i] < basis_[r])) r = static_cast<int>(i);
      }
      if (r < 0) return true;
      const auto& row = a_[r];
      int q = -1;
      for (int j = 0; j < nc; ++j) {
        if (sgn(row[j]) >= 0) continue;
        // reduced_j / -a_rj < reduced_q / -a_rq
        if (q < 0 || cmp(reduced_[j] * row[q], reduced_[q] * row[j]) > 0) q = j;
      }
      if (q < 0) return false;
      pivot(r, q);
      if (++pivots_ > kPivotLimit) {
        throw Error(ErrorKind::kIterationLimit, "simplex pivot limit reached");
      }
    }
  }

  // Returns false when the objective is unbounded below.
  bool phase_two() {
    allow_artificial_ = false;
    const int nc = static_cast<int>(columns_.size());
    for (int j = 0; j < nc; ++j) reduced_[j] = cost_[j];
    value_ = 0;
    for (size_t i = 0; i < a_.size(); ++i) {
      const T& cb = cost_[basis_[i]];
      if (sgn(cb) == 0) continue;
      for (int j = 0; j < nc; ++j) {
        if (sgn(a_[i][j]) != 0) reduced_[j] -= cb * a_[i][j];
      }
      value_ += cb * rhs_[i];
    }
    return iterate();
  }

  VertexSolution extract(int variable_count) const {
    VertexSolution out;
    out.values.assign(variable_count, Rational(0));
    for (size_t i = 0; i < a_.size(); ++i) {
      const Column& col = columns_[basis_[i]];
      switch (col.kind) {
        case ColumnKind::kStructural:
          out.values[col.index] += to_exact(rhs_[i]);
          out.basis.push_back({BasisEntry::Kind::kStructural, col.index});
          break;
        case ColumnKind::kNegativePart:
          out.values[col.index] -= to_exact(rhs_[i]);
          out.basis.push_back({BasisEntry::Kind::kNegativePart, col.index});
          break;
        case ColumnKind::kSlack:
          out.basis.push_back({BasisEntry::Kind::kSlack, col.index});
          break;
        case ColumnKind::kArtificial:
          throw Error(ErrorKind::kInvariantBreach, "artificial column left in basis");
      }
    }
    out.pivots = static_cast<int>(pivots_);
    return out;
  }

 private:
  void drop_artificials() {
    size_t keep = columns_.size();
    while (keep > 0 && is_artificial(static_cast<int>(keep) - 1)) --keep;
    if (keep == columns_.size()) return;
    columns_.resize(keep);
    for (auto& row : a_) row.resize(keep);
    cost_.resize(keep);
    reduced_.resize(keep);
  }

  bool is_artificial(int col) const {
    return columns_[col].kind == ColumnKind::kArtificial;
  }

  bool iterate() {
    const int nc = static_cast<int>(columns_.size());
    while (true) {
      int q = -1;
      for (int j = 0; j < nc; ++j) {
        if (sgn(reduced_[j]) < 0 && (allow_artificial_ || !is_artificial(j))) {
          q = j;
          break;
        }
      }
      if (q < 0) return true;
      int r = -1;
      for (size_t i = 0; i < a_.size(); ++i) {
        const T& aiq = a_[i][q];
        if (sgn(aiq) <= 0) continue;
        if (r < 0) {
          r = static_cast<int>(i);
          continue;
        }
        // rhs_i / a_iq vs rhs_r / a_rq, both denominators positive.
        int c = cmp(rhs_[i] * a_[r][q], rhs_[r] * aiq);
        if (c < 0 || (c == 0 && basis_[i] < basis_[r])) r = static_cast<int>(i);
      }
      if (r < 0) return false;
      pivot(r, q);
      if (++pivots_ > kPivotLimit) {
        throw Error(ErrorKind::kIterationLimit, "simplex pivot limit reached");
      }
    }
  }

  void pivot(int r, int q) {
    auto& prow = a_[r];
    nz_.clear();
    for (size_t j = 0; j < prow.size(); ++j) {
      if (sgn(prow[j]) != 0) nz_.push_back(static_cast<int>(j));
    }
    if (!(prow[q] == T(1))) {
      T inv = T(1) / prow[q];
      for (int j : nz_) prow[j] *= inv;
      rhs_[r] *= inv;
    }
    T f;
    for (size_t i = 0; i < a_.size(); ++i) {
      if (static_cast<int>(i) == r || sgn(a_[i][q]) == 0) continue;
      f = a_[i][q];
      auto& row = a_[i];
      for (int j : nz_) row[j] -= f * prow[j];
      if (sgn(rhs_[r]) != 0) rhs_[i] -= f * rhs_[r];
    }
    if (sgn(reduced_[q]) != 0) {
      f = reduced_[q];
      for (int j : nz_) reduced_[j] -= f * prow[j];
      value_ += f * rhs_[r];
    }
    basis_[r] = q;
  }

  std::vector<Column> columns_;
  std::vector<int> negative_column_;
  std::vector<std::vector<T>> a_;
  std::vector<T> rhs_;
  std::vector<int> basis_;
  std::vector<T> cost_;
  std::vector<T> reduced_;
  T value_;
  bool allow_artificial_ = false;
  long pivots_ = 0;
  std::vector<int> nz_;
};

template <class T>
SolveStatus start(Tableau<T>& tableau) {
  if (!tableau.phase_one()) return SolveStatus::kInfeasible;
  if (!tableau.phase_two()) return SolveStatus::kUnbounded;
  return SolveStatus::kOptimal;
}

template <class T>
SolveStatus absorb(Tableau<T>& tableau, const Constraint& cut, int row) {
  tableau.add_row(cut, row);
  return tableau.dual_iterate() ? SolveStatus::kOptimal : SolveStatus::kInfeasible;
}

Rational objective_of(const std::vector<Rational>& objective,
                      const std::vector<Rational>& values) {
  Rational sum = 0;
  for (size_t v = 0; v < values.size(); ++v) sum += objective[v] * values[v];
  return sum;
}

}  // namespace

// Every tableau starts on SmallRational and is rebuilt over Rational when a
// value leaves its range. Both follow the same pivot sequence since the
// arithmetic is exact either way.
SolveResult solve(const LinearProgram& lp) {
  lp.validate();
  auto run = [&](auto& tableau) {
    SolveResult result;
    result.status = start(tableau);
    if (result.optimal()) {
      result.solution = tableau.extract(lp.variable_count());
      result.solution.objective_value = objective_of(lp.objective(), result.solution.values);
    }
    return result;
  };
  try {
    Tableau<SmallRational> tableau(lp);
    return run(tableau);
  } catch (const RationalOverflow&) {
    Tableau<Rational> tableau(lp);
    return run(tableau);
  }
}

struct LpSession::Impl {
  explicit Impl(const LinearProgram& lp) : base(lp) {}

  SolveStatus begin() {
    try {
      small = std::make_unique<Tableau<SmallRational>>(base);
      return start(*small);
    } catch (const RationalOverflow&) {
      return promote();
    }
  }

  SolveStatus add(const Constraint& cut, int row) {
    cuts.emplace_back(cut, row);
    if (small) {
      try {
        return absorb(*small, cut, row);
      } catch (const RationalOverflow&) {
        return promote();
      }
    }
    return absorb(*exact, cut, row);
  }

  // Replays the session over Rational.
  SolveStatus promote() {
    small.reset();
    exact = std::make_unique<Tableau<Rational>>(base);
    SolveStatus status = start(*exact);
    for (const auto& [cut, row] : cuts) {
      if (status != SolveStatus::kOptimal) break;
      status = absorb(*exact, cut, row);
    }
    return status;
  }

  VertexSolution extract() const {
    const int n = base.variable_count();
    return small ? small->extract(n) : exact->extract(n);
  }

  LinearProgram base;
  std::vector<std::pair<Constraint, int>> cuts;
  std::unique_ptr<Tableau<SmallRational>> small;
  std::unique_ptr<Tableau<Rational>> exact;
};

LpSession::LpSession(const LinearProgram& lp) : objective_(lp.objective()) {
  lp.validate();
  impl_ = std::make_unique<Impl>(lp);
  result_.status = impl_->begin();
  if (result_.optimal()) refresh();
}

LpSession::~LpSession() = default;
LpSession::LpSession(LpSession&&) noexcept = default;
LpSession& LpSession::operator=(LpSession&&) noexcept = default;

void LpSession::refresh() {
  result_.solution = impl_->extract();
  result_.solution.objective_value = objective_of(objective_, result_.solution.values);
}

const SolveResult& LpSession::add_cut(const Constraint& cut, int row) {
  if (!result_.optimal()) {
    throw Error(ErrorKind::kMalformedProgram, "session has no optimal basis");
  }
  if (cut.relation != Relation::kLessEqual) {
    throw Error(ErrorKind::kMalformedProgram, "session cuts must be <= rows");
  }
  for (const Term& t : cut.terms) {
    if (t.var < 0 || t.var >= impl_->base.variable_count()) {
      throw Error(ErrorKind::kMalformedProgram,
                  "cut references undeclared variable " + std::to_string(t.var));
    }
  }
  result_.status = impl_->add(cut, row);
  if (result_.optimal()) {
    refresh();
  } else {
    result_.solution = VertexSolution{};
  }
  return result_;
}

SolveResult add_constraint_and_resolve(LinearProgram& lp, const VertexSolution& prior,
                                       Constraint cut) {
  for (const Term& t : cut.terms) {
    if (t.var < 0 || t.var >= lp.variable_count()) {
      throw Error(ErrorKind::kMalformedProgram,
                  "cut references undeclared variable " + std::to_string(t.var));
    }
  }
  if (static_cast<int>(prior.values.size()) != lp.variable_count()) {
    throw Error(ErrorKind::kMalformedProgram, "prior solution does not match program");
  }
  if (satisfies(cut, prior.values)) {
    throw Error(ErrorKind::kCutNotViolated,
                "cut \"" + cut.name + "\" is satisfied by the prior solution");
  }
  lp.add_constraint(std::move(cut));
  return solve(lp);
}

namespace {

void write_terms(std::ostream& out, const LinearProgram& lp,
                 const std::vector<Term>& terms) {
  if (terms.empty()) {
    out << "0";
    return;
  }
  bool first = true;
  for (const Term& t : terms) {
    if (!first) out << " + ";
    first = false;
    out << format_rational(t.coeff) << " " << lp.variables()[t.var].name;
  }
}

}  // namespace

void dump_lp(const LinearProgram& lp, std::ostream& out) {
  out << "variables " << lp.variable_count() << "\n";
  for (const Variable& v : lp.variables()) {
    out << "var " << v.name << (v.nonnegative ? " >= 0" : " free") << "\n";
  }
  std::vector<Term> obj;
  for (int v = 0; v < lp.variable_count(); ++v) {
    if (sgn(lp.objective()[v]) != 0) obj.push_back(Term{v, lp.objective()[v]});
  }
  out << "minimize ";
  write_terms(out, lp, obj);
  out << "\n";
  for (size_t i = 0; i < lp.constraints().size(); ++i) {
    const Constraint& c = lp.constraints()[i];
    out << (c.name.empty() ? "c" + std::to_string(i) : c.name) << ": ";
    write_terms(out, lp, c.terms);
    out << (c.relation == Relation::kEqual ? " = " : " <= ")
        << format_rational(c.rhs) << "\n";
  }
}

}  // namespace rrst
