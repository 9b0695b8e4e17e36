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

#include <rrst/rrst.h>

#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

std::string data_path(const std::string& name) {
  return std::string(RRST_TEST_DATA_DIR) + "/" + name;
}

std::string take(char* text) {
  std::string out = text ? text : "";
  rrst_string_free(text);
  return out;
}

struct Problem {
  rrst_problem* handle = nullptr;
  ~Problem() { rrst_problem_free(handle); }
};

struct Result {
  rrst_solution* handle = nullptr;
  ~Result() { rrst_solution_free(handle); }
};

TEST_CASE("load, solve and read back") {
  Problem p;
  REQUIRE(rrst_problem_load(data_path("g6_s31_k3.json").c_str(), &p.handle) == RRST_OK);
  CHECK(rrst_problem_is_matroid(p.handle) == 0);
  int nodes = 0, elements = 0, k = 0;
  REQUIRE(rrst_problem_summary(p.handle, &nodes, &elements, &k) == RRST_OK);
  CHECK(nodes == 6);
  CHECK(k == 3);

  rrst_options options;
  rrst_default_options(&options);
  Result s;
  REQUIRE(rrst_solve(p.handle, &options, 0, &s.handle) == RRST_OK);
  char* total = nullptr;
  REQUIRE(rrst_solution_total(s.handle, &total) == RRST_OK);
  CHECK(take(total) == "122");
  rrst_stats stats{};
  REQUIRE(rrst_solution_stats(s.handle, &stats) == RRST_OK);
  CHECK(stats.iterations >= 1);
  CHECK(stats.lp_solves >= stats.iterations);

  char* json = nullptr;
  REQUIRE(rrst_solution_json(s.handle, &json) == RRST_OK);
  const std::string solution = take(json);
  CHECK(nlohmann::json::parse(solution)["total"] == "122");
  char* failure = nullptr;
  CHECK(rrst_verify(p.handle, solution.c_str(), &failure) == RRST_OK);
  take(failure);

  char* trace = nullptr;
  REQUIRE(rrst_solution_trace_json(s.handle, &trace) == RRST_OK);
  CHECK(nlohmann::json::parse(take(trace)).is_array());

  Result m;
  REQUIRE(rrst_solve(p.handle, &options, 1, &m.handle) == RRST_OK);
  char* matroid_json = nullptr;
  REQUIRE(rrst_solution_json(m.handle, &matroid_json) == RRST_OK);
  auto a = nlohmann::json::parse(solution);
  auto b = nlohmann::json::parse(take(matroid_json));
  CHECK(a["X"] == b["X"]);
  CHECK(a["Y"] == b["Y"]);
}

TEST_CASE("status codes") {
  Problem p;
  CHECK(rrst_problem_from_json("{broken", &p.handle) == RRST_ERROR_PARSE);
  CHECK(std::string(rrst_last_error()).size() > 0);
  CHECK(rrst_problem_load(data_path("bad_k.json").c_str(), &p.handle) == RRST_ERROR_VALIDATION);
  CHECK(std::string(rrst_last_error()).find("k = 3") != std::string::npos);
  CHECK(rrst_problem_load("/nonexistent/file.json", &p.handle) == RRST_ERROR_IO);
  CHECK(rrst_solve(nullptr, nullptr, 0, nullptr) == RRST_ERROR_ARGUMENT);
  CHECK(std::string(rrst_status_name(RRST_ERROR_VERIFICATION)).size() > 0);
  CHECK(std::string(rrst_version()).size() > 0);
}

TEST_CASE("verification failure is reported") {
  Problem p;
  REQUIRE(rrst_problem_load(data_path("k3_unit.json").c_str(), &p.handle) == RRST_OK);
  char* failure = nullptr;
  const char* tampered =
      R"({"X":[0],"Y":[0,1],"Z":[],"first_stage":"1","second_stage":"2","total":"3"})";
  CHECK(rrst_verify(p.handle, tampered, &failure) == RRST_ERROR_VERIFICATION);
  CHECK(take(failure) == "X not spanning");
}

TEST_CASE("matroid problems, oracle and compare") {
  Problem p;
  REQUIRE(rrst_problem_load(data_path("partition.json").c_str(), &p.handle) == RRST_OK);
  CHECK(rrst_problem_is_matroid(p.handle) == 1);
  char* oracle = nullptr;
  REQUIRE(rrst_oracle(p.handle, &oracle) == RRST_OK);
  CHECK(nlohmann::json::parse(take(oracle))["total"] == "15");
  rrst_options options;
  rrst_default_options(&options);
  char* report = nullptr;
  REQUIRE(rrst_compare(p.handle, &options, &report) == RRST_OK);
  auto r = nlohmann::json::parse(take(report));
  CHECK(r["agree"] == true);
  CHECK(r["solver_total"] == "15");
}

TEST_CASE("generate and builtin suite") {
  rrst_gen_params params{6, 0.5, 2, 9, 42};
  char* first = nullptr;
  char* second = nullptr;
  REQUIRE(rrst_generate(&params, &first) == RRST_OK);
  REQUIRE(rrst_generate(&params, &second) == RRST_OK);
  const std::string text = take(first);
  CHECK(text == take(second));
  Problem p;
  CHECK(rrst_problem_from_json(text.c_str(), &p.handle) == RRST_OK);
  params.k = 6;
  char* bad = nullptr;
  CHECK(rrst_generate(&params, &bad) == RRST_ERROR_VALIDATION);
  char* suite = nullptr;
  REQUIRE(rrst_builtin_suite(4, &suite) == RRST_OK);
  auto cases = nlohmann::json::parse(take(suite));
  CHECK(cases.size() == 3 * (1 * 1 + 1 * 2 + 2 * 3 + 6 * 4));
}

}  // namespace
