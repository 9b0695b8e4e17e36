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

#include "rrst/rrst.h"

#include <chrono>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <optional>
#include <string>
#include <variant>

#include "error.hpp"
#include "generator.hpp"
#include "instance.hpp"
#include "json.hpp"
#include "matroid.hpp"
#include "oracle.hpp"
#include "relaxation_solver.hpp"
#include "verify.hpp"

struct rrst_problem {
  std::variant<rrst::Instance, rrst::MatroidInstance> instance;
};

struct rrst_solution {
  rrst::Solution solution;
};

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

thread_local std::string last_error;

rrst_status status_of(rrst::ErrorKind kind) {
  using rrst::ErrorKind;
  switch (kind) {
    case ErrorKind::kParse:
      return RRST_ERROR_PARSE;
    case ErrorKind::kValidation:
    case ErrorKind::kUnknownEdge:
    case ErrorKind::kElementNotInGround:
      return RRST_ERROR_VALIDATION;
    case ErrorKind::kGroundTooLarge:
    case ErrorKind::kTooManyTrees:
      return RRST_ERROR_LIMIT;
    case ErrorKind::kIo:
      return RRST_ERROR_IO;
    default:
      return RRST_ERROR_INTERNAL;
  }
}

rrst_status fail(rrst_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

template <class Body>
rrst_status guarded(Body&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const rrst::Error& e) {
    return fail(status_of(e.kind()),
                std::string(rrst::error_kind_name(e.kind())) + ": " + e.what());
  } catch (const json::exception& e) {
    return fail(RRST_ERROR_PARSE, std::string("Parse: ") + e.what());
  } catch (const std::bad_alloc&) {
    return fail(RRST_ERROR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(RRST_ERROR_INTERNAL, e.what());
  }
}

char* copy_string(const std::string& text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

rrst::SolverOptions convert(const rrst_options* options) {
  rrst_options defaults;
  rrst_default_options(&defaults);
  const rrst_options& o = options ? *options : defaults;
  rrst::SolverOptions out;
  out.fixing = o.fixing == RRST_FIXING_STRICT ? rrst::FixingMode::kStrict
                                              : rrst::FixingMode::kBatch;
  out.finish = o.finish == RRST_FINISH_LP ? rrst::FinishMode::kLp : rrst::FinishMode::kGreedy;
  out.relaxation.separation = o.separation == RRST_SEPARATION_EXHAUSTIVE
                                  ? rrst::SeparationMode::kExhaustive
                                  : rrst::SeparationMode::kMinCut;
  out.relaxation.all_cuts = o.all_cuts != 0;
  out.relaxation.lp_dump_path = o.lp_dump_path ? o.lp_dump_path : "";
  out.carry_cuts = o.carry_cuts != 0;
  return out;
}

rrst::Solution run_solver(const rrst_problem& problem, const rrst::SolverOptions& options,
                          bool as_matroid) {
  if (const auto* graph = std::get_if<rrst::Instance>(&problem.instance)) {
    if (as_matroid) return rrst::solve_rrmb(rrst::graphic_instance(*graph), options);
    return rrst::solve_rrst(*graph, options);
  }
  return rrst::solve_rrmb(std::get<rrst::MatroidInstance>(problem.instance), options);
}

rrst::TreePairResult run_oracle(const rrst_problem& problem) {
  if (const auto* graph = std::get_if<rrst::Instance>(&problem.instance)) {
    return rrst::brute_force_rrst(*graph);
  }
  return rrst::brute_force_rrmb(std::get<rrst::MatroidInstance>(problem.instance));
}

json ids(const std::vector<rrst::EdgeId>& set) {
  json out = json::array();
  for (rrst::EdgeId e : set) out.push_back(e.value);
  return out;
}

const char* shape_name(rrst::ModelShape shape) {
  switch (shape) {
    case rrst::ModelShape::kFull:
      return "full";
    case rrst::ModelShape::kYOnly:
      return "y-only";
    case rrst::ModelShape::kXOnly:
      return "x-only";
  }
  return "?";
}

}  // namespace

extern "C" {

const char* rrst_version(void) { return "1.0.0"; }

const char* rrst_status_name(rrst_status status) {
  switch (status) {
    case RRST_OK:
      return "ok";
    case RRST_ERROR_IO:
      return "io";
    case RRST_ERROR_VALIDATION:
      return "validation";
    case RRST_ERROR_VERIFICATION:
      return "verification";
    case RRST_ERROR_INTERNAL:
      return "internal";
    case RRST_ERROR_PARSE:
      return "parse";
    case RRST_ERROR_LIMIT:
      return "limit";
    case RRST_ERROR_ARGUMENT:
      return "argument";
  }
  return "unknown";
}

const char* rrst_last_error(void) { return last_error.c_str(); }

void rrst_default_options(rrst_options* options) {
  if (options == nullptr) return;
  options->fixing = RRST_FIXING_BATCH;
  options->separation = RRST_SEPARATION_MINCUT;
  options->finish = RRST_FINISH_GREEDY;
  options->all_cuts = 0;
  options->carry_cuts = 1;
  options->lp_dump_path = nullptr;
}

rrst_status rrst_problem_from_json(const char* text, rrst_problem** out) {
  if (text == nullptr || out == nullptr) return fail(RRST_ERROR_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    json doc = json::parse(text);
    auto problem = std::make_unique<rrst_problem>();
    if (doc.is_object() && doc.contains("family")) {
      problem->instance = rrst::matroid_instance_from_json(doc);
    } else {
      problem->instance = rrst::instance_from_json(doc);
    }
    *out = problem.release();
    return RRST_OK;
  });
}

rrst_status rrst_problem_load(const char* path, rrst_problem** out) {
  if (path == nullptr || out == nullptr) return fail(RRST_ERROR_ARGUMENT, "null argument");
  *out = nullptr;
  std::string text;
  rrst_status status = guarded([&] {
    text = rrst::read_text_file(path);
    return RRST_OK;
  });
  if (status != RRST_OK) return status;
  status = rrst_problem_from_json(text.c_str(), out);
  if (status != RRST_OK) last_error = std::string(path) + ": " + last_error;
  return status;
}

void rrst_problem_free(rrst_problem* problem) { delete problem; }

int rrst_problem_is_matroid(const rrst_problem* problem) {
  return problem != nullptr &&
         std::holds_alternative<rrst::MatroidInstance>(problem->instance);
}

rrst_status rrst_problem_summary(const rrst_problem* problem, int* nodes, int* elements,
                                 int* k) {
  if (problem == nullptr) return fail(RRST_ERROR_ARGUMENT, "null problem");
  return guarded([&] {
    int n = 0;
    int m = 0;
    int kk = 0;
    if (const auto* graph = std::get_if<rrst::Instance>(&problem->instance)) {
      n = graph->node_count();
      m = graph->edge_count();
      kk = graph->k;
    } else {
      const auto& minst = std::get<rrst::MatroidInstance>(problem->instance);
      if (const rrst::MultiGraph* g = minst.matroid.graph()) n = g->node_count();
      m = static_cast<int>(minst.matroid.ground().size());
      kk = minst.k;
    }
    if (nodes) *nodes = n;
    if (elements) *elements = m;
    if (k) *k = kk;
    return RRST_OK;
  });
}

rrst_status rrst_solve(const rrst_problem* problem, const rrst_options* options,
                       int as_matroid, rrst_solution** out) {
  if (problem == nullptr || out == nullptr) return fail(RRST_ERROR_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    auto result = std::make_unique<rrst_solution>();
    result->solution = run_solver(*problem, convert(options), as_matroid != 0);
    *out = result.release();
    return RRST_OK;
  });
}

void rrst_solution_free(rrst_solution* solution) { delete solution; }

rrst_status rrst_solution_json(const rrst_solution* solution, char** out) {
  if (solution == nullptr || out == nullptr) return fail(RRST_ERROR_ARGUMENT, "null argument");
  return guarded([&] {
    *out = copy_string(rrst::solution_to_json(solution->solution));
    return RRST_OK;
  });
}

rrst_status rrst_solution_trace_json(const rrst_solution* solution, char** out) {
  if (solution == nullptr || out == nullptr) return fail(RRST_ERROR_ARGUMENT, "null argument");
  return guarded([&] {
    ordered_json trace = ordered_json::array();
    for (const rrst::IterationRecord& r : solution->solution.trace) {
      ordered_json row;
      row["iteration"] = r.iteration;
      row["shape"] = shape_name(r.shape);
      row["objective"] = rrst::format_rational(r.objective);
      row["rounds"] = r.rounds;
      row["cuts_x"] = r.cuts_x;
      row["cuts_y"] = r.cuts_y;
      row["removed"] = r.removed;
      row["fixed_x"] = r.fixed_x;
      row["fixed_y"] = r.fixed_y;
      row["moved_to_z"] = r.moved_to_z;
      row["L"] = r.budget;
      row["Z"] = r.z_size;
      row["EX"] = r.ex;
      row["EY"] = r.ey;
      row["EZ"] = r.ez;
      trace.push_back(row);
    }
    *out = copy_string(trace.dump());
    return RRST_OK;
  });
}

rrst_status rrst_solution_total(const rrst_solution* solution, char** out) {
  if (solution == nullptr || out == nullptr) return fail(RRST_ERROR_ARGUMENT, "null argument");
  return guarded([&] {
    *out = copy_string(rrst::format_rational(solution->solution.total));
    return RRST_OK;
  });
}

rrst_status rrst_solution_stats(const rrst_solution* solution, rrst_stats* out) {
  if (solution == nullptr || out == nullptr) return fail(RRST_ERROR_ARGUMENT, "null argument");
  out->iterations = solution->solution.iterations;
  out->lp_solves = solution->solution.lp_solves;
  out->cuts_x = solution->solution.cuts_x;
  out->cuts_y = solution->solution.cuts_y;
  return RRST_OK;
}

rrst_status rrst_oracle(const rrst_problem* problem, char** out) {
  if (problem == nullptr || out == nullptr) return fail(RRST_ERROR_ARGUMENT, "null argument");
  return guarded([&] {
    *out = copy_string(rrst::oracle_to_json(run_oracle(*problem)).dump());
    return RRST_OK;
  });
}

rrst_status rrst_compare(const rrst_problem* problem, const rrst_options* options,
                         char** out) {
  if (problem == nullptr || out == nullptr) return fail(RRST_ERROR_ARGUMENT, "null argument");
  return guarded([&] {
    int n = 0;
    int m = 0;
    int k = 0;
    rrst_problem_summary(problem, &n, &m, &k);
    ordered_json report;
    report["n"] = n;
    report["m"] = m;
    report["k"] = k;
    const auto start = std::chrono::steady_clock::now();
    rrst::Solution solution = run_solver(*problem, convert(options), false);
    const auto solved = std::chrono::steady_clock::now();
    rrst::TreePairResult oracle = run_oracle(*problem);
    const auto checked = std::chrono::steady_clock::now();
    const bool agree = solution.total == oracle.best_cost;
    report["solver_total"] = rrst::format_rational(solution.total);
    report["oracle_total"] = rrst::format_rational(oracle.best_cost);
    report["agree"] = agree;
    report["lp_bound"] = rrst::format_rational(solution.lp_bound);
    report["iterations"] = solution.iterations;
    report["lp_solves"] = solution.lp_solves;
    report["cuts_x"] = solution.cuts_x;
    report["cuts_y"] = solution.cuts_y;
    report["X"] = ids(solution.X);
    report["Y"] = ids(solution.Y);
    report["solver_ms"] =
        std::chrono::duration<double, std::milli>(solved - start).count();
    report["oracle_ms"] =
        std::chrono::duration<double, std::milli>(checked - solved).count();
    *out = copy_string(report.dump());
    return RRST_OK;
  });
}

rrst_status rrst_verify(const rrst_problem* problem, const char* solution_json,
                        char** failure) {
  if (problem == nullptr || solution_json == nullptr) {
    return fail(RRST_ERROR_ARGUMENT, "null argument");
  }
  if (failure) *failure = nullptr;
  return guarded([&] {
    rrst::Solution solution = rrst::solution_from_json(solution_json);
    std::optional<std::string> verdict;
    if (const auto* graph = std::get_if<rrst::Instance>(&problem->instance)) {
      verdict = rrst::verify_solution(*graph, solution);
    } else {
      verdict = rrst::verify_solution(std::get<rrst::MatroidInstance>(problem->instance),
                                      solution);
    }
    if (!verdict) return RRST_OK;
    if (failure) *failure = copy_string(*verdict);
    return fail(RRST_ERROR_VERIFICATION, *verdict);
  });
}

rrst_status rrst_generate(const rrst_gen_params* params, char** out) {
  if (params == nullptr || out == nullptr) return fail(RRST_ERROR_ARGUMENT, "null argument");
  return guarded([&] {
    rrst::GeneratorParams p;
    p.nodes = params->nodes;
    p.density = params->density;
    p.k = params->k;
    p.cost_max = params->cost_max;
    p.seed = params->seed;
    *out = copy_string(rrst::serialize_instance(rrst::generate_instance(p)));
    return RRST_OK;
  });
}

rrst_status rrst_builtin_suite(int max_nodes, char** out) {
  if (out == nullptr) return fail(RRST_ERROR_ARGUMENT, "null argument");
  return guarded([&] {
    ordered_json suite = ordered_json::array();
    for (const rrst::SuiteCase& c : rrst::builtin_small_suite(max_nodes)) {
      ordered_json entry;
      entry["name"] = c.name;
      entry["instance"] = rrst::instance_to_json(c.instance);
      suite.push_back(entry);
    }
    *out = copy_string(suite.dump());
    return RRST_OK;
  });
}

void rrst_string_free(char* text) { std::free(text); }

}  // extern "C"
