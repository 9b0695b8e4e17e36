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

#include <algorithm>
#include <atomic>
#include <chrono>
#include <condition_variable>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "rrst/rrst.h"

namespace {

enum class LogLevel { kError, kInfo, kDebug };

LogLevel log_level() {
  const char* env = std::getenv("RRST_LOG");
  if (env == nullptr) return LogLevel::kError;
  const std::string value = env;
  if (value == "debug") return LogLevel::kDebug;
  if (value == "info") return LogLevel::kInfo;
  return LogLevel::kError;
}

int exit_code(rrst_status status) {
  switch (status) {
    case RRST_OK:
      return 0;
    case RRST_ERROR_IO:
    case RRST_ERROR_ARGUMENT:
      return 1;
    case RRST_ERROR_VALIDATION:
    case RRST_ERROR_PARSE:
    case RRST_ERROR_LIMIT:
      return 2;
    case RRST_ERROR_VERIFICATION:
      return 3;
    case RRST_ERROR_INTERNAL:
      return 4;
  }
  return 4;
}

int report_failure(rrst_status status) {
  std::cerr << "error: " << rrst_last_error() << "\n";
  return exit_code(status);
}

// Owns a string returned by the library.
struct OwnedString {
  char* text = nullptr;
  ~OwnedString() { rrst_string_free(text); }
  std::string str() const { return text ? text : ""; }
};

struct ProblemHandle {
  rrst_problem* problem = nullptr;
  ~ProblemHandle() { rrst_problem_free(problem); }
};

struct SolutionHandle {
  rrst_solution* solution = nullptr;
  ~SolutionHandle() { rrst_solution_free(solution); }
};

bool write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text << "\n";
    return true;
  }
  std::ofstream out(path, std::ios::binary);
  out << text << "\n";
  if (!out) {
    std::cerr << "error: cannot write " << path << "\n";
    return false;
  }
  return true;
}

struct SolveArgs {
  std::string input;
  std::string output;
  std::string mode = "batch";
  std::string separation = "mincut";
  std::string cuts = "one";
  std::string finish = "greedy";
  std::string lp_dump;
  bool matroid = false;
};

rrst_options to_options(const SolveArgs& args) {
  rrst_options options;
  rrst_default_options(&options);
  options.fixing = args.mode == "strict" ? RRST_FIXING_STRICT : RRST_FIXING_BATCH;
  options.separation =
      args.separation == "exhaustive" ? RRST_SEPARATION_EXHAUSTIVE : RRST_SEPARATION_MINCUT;
  options.all_cuts = args.cuts == "all";
  options.finish = args.finish == "lp" ? RRST_FINISH_LP : RRST_FINISH_GREEDY;
  options.lp_dump_path = args.lp_dump.empty() ? nullptr : args.lp_dump.c_str();
  return options;
}

int cmd_solve(const SolveArgs& args) {
  const LogLevel level = log_level();
  ProblemHandle problem;
  if (rrst_status s = rrst_problem_load(args.input.c_str(), &problem.problem); s != RRST_OK) {
    return report_failure(s);
  }
  if (!args.lp_dump.empty()) std::ofstream(args.lp_dump, std::ios::trunc);
  const rrst_options options = to_options(args);
  const auto start = std::chrono::steady_clock::now();
  SolutionHandle solution;
  if (rrst_status s = rrst_solve(problem.problem, &options, args.matroid, &solution.solution);
      s != RRST_OK) {
    return report_failure(s);
  }
  const double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
          .count();
  OwnedString json;
  if (rrst_status s = rrst_solution_json(solution.solution, &json.text); s != RRST_OK) {
    return report_failure(s);
  }
  if (level != LogLevel::kError) {
    rrst_stats stats;
    rrst_solution_stats(solution.solution, &stats);
    std::cerr << "info: iterations=" << stats.iterations << " lp_solves=" << stats.lp_solves
              << " cuts_x=" << stats.cuts_x << " cuts_y=" << stats.cuts_y << " ms=" << ms
              << "\n";
  }
  if (level == LogLevel::kDebug) {
    OwnedString trace;
    if (rrst_solution_trace_json(solution.solution, &trace.text) == RRST_OK) {
      for (const auto& row : nlohmann::json::parse(trace.str())) {
        std::cerr << "debug: " << row.dump() << "\n";
      }
    }
  }
  return write_output(args.output, json.str()) ? 0 : 1;
}

int cmd_gen(const rrst_gen_params& params, const std::string& output) {
  OwnedString json;
  if (rrst_status s = rrst_generate(&params, &json.text); s != RRST_OK) {
    return report_failure(s);
  }
  return write_output(output, json.str()) ? 0 : 1;
}

int cmd_verify(const std::string& instance, const std::string& solution_path) {
  ProblemHandle problem;
  if (rrst_status s = rrst_problem_load(instance.c_str(), &problem.problem); s != RRST_OK) {
    return report_failure(s);
  }
  std::ifstream in(solution_path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot open " << solution_path << "\n";
    return 1;
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  OwnedString failure;
  rrst_status s = rrst_verify(problem.problem, buffer.str().c_str(), &failure.text);
  if (s == RRST_ERROR_VERIFICATION) {
    std::cerr << "verification failed: " << failure.str() << "\n";
    return 3;
  }
  if (s != RRST_OK) return report_failure(s);
  std::cout << "ok\n";
  return 0;
}

int cmd_oracle(const std::string& input) {
  ProblemHandle problem;
  if (rrst_status s = rrst_problem_load(input.c_str(), &problem.problem); s != RRST_OK) {
    return report_failure(s);
  }
  OwnedString json;
  if (rrst_status s = rrst_oracle(problem.problem, &json.text); s != RRST_OK) {
    return report_failure(s);
  }
  std::cout << json.str() << "\n";
  return 0;
}

// A named instance document, or an error already recorded against it.
struct SuiteEntry {
  std::string name;
  std::string text;
  std::string error;
};

struct CompareResult {
  std::string line;
  bool ok = false;
};

CompareResult compare_one(const SuiteEntry& entry, const rrst_options& options) {
  nlohmann::ordered_json report;
  report["name"] = entry.name;
  auto failed = [&](const std::string& message) {
    report["agree"] = false;
    report["error"] = message;
    return CompareResult{report.dump(), false};
  };
  if (!entry.error.empty()) return failed(entry.error);
  ProblemHandle problem;
  if (rrst_problem_from_json(entry.text.c_str(), &problem.problem) != RRST_OK) {
    return failed(rrst_last_error());
  }
  OwnedString json;
  if (rrst_compare(problem.problem, &options, &json.text) != RRST_OK) {
    return failed(rrst_last_error());
  }
  auto body = nlohmann::ordered_json::parse(json.str());
  for (auto it = body.begin(); it != body.end(); ++it) report[it.key()] = it.value();
  return CompareResult{report.dump(), body.at("agree").get<bool>()};
}

std::optional<std::pair<std::uint64_t, std::uint64_t>> parse_seed_range(
    const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const std::uint64_t seed = std::stoull(text);
      return std::pair{seed, seed};
    }
    const std::uint64_t lo = std::stoull(text.substr(0, dots));
    const std::uint64_t hi = std::stoull(text.substr(dots + 2));
    if (lo > hi) return std::nullopt;
    return std::pair{lo, hi};
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

struct CompareArgs {
  std::string suite;
  std::string seeds;
  int nodes = 6;
  double density = 0.5;
  int cost_max = 9;
  int jobs = 0;
  SolveArgs solve;
};

int cmd_compare(const CompareArgs& args) {
  std::vector<SuiteEntry> entries;
  if (!args.seeds.empty()) {
    const auto range = parse_seed_range(args.seeds);
    if (!range) {
      std::cerr << "error: --seeds expects a..b\n";
      return 1;
    }
    for (std::uint64_t seed = range->first; seed <= range->second; ++seed) {
      rrst_gen_params params{args.nodes, args.density,
                             static_cast<int>(seed % static_cast<std::uint64_t>(args.nodes)),
                             args.cost_max, seed};
      OwnedString json;
      SuiteEntry entry{"seed" + std::to_string(seed), "", ""};
      if (rrst_generate(&params, &json.text) == RRST_OK) {
        entry.text = json.str();
      } else {
        entry.error = rrst_last_error();
      }
      entries.push_back(std::move(entry));
    }
  } else if (args.suite == "builtin-small") {
    OwnedString json;
    if (rrst_status s = rrst_builtin_suite(5, &json.text); s != RRST_OK) {
      return report_failure(s);
    }
    for (const auto& item : nlohmann::json::parse(json.str())) {
      entries.push_back({item.at("name").get<std::string>(), item.at("instance").dump(), ""});
    }
  } else if (!args.suite.empty()) {
    namespace fs = std::filesystem;
    std::error_code ec;
    if (!fs::is_directory(args.suite, ec)) {
      std::cerr << "error: suite directory " << args.suite << " not found\n";
      return 1;
    }
    std::vector<fs::path> files;
    for (const auto& item : fs::directory_iterator(args.suite)) {
      if (item.is_regular_file() && item.path().extension() == ".json") {
        files.push_back(item.path());
      }
    }
    std::sort(files.begin(), files.end());
    for (const auto& path : files) {
      SuiteEntry entry{path.filename().string(), "", ""};
      std::ifstream in(path, std::ios::binary);
      std::stringstream buffer;
      buffer << in.rdbuf();
      if (!in) {
        entry.error = "cannot read file";
      } else {
        entry.text = buffer.str();
      }
      entries.push_back(std::move(entry));
    }
  } else {
    std::cerr << "error: compare needs --suite or --seeds\n";
    return 1;
  }

  const rrst_options options = to_options(args.solve);
  const size_t count = entries.size();
  std::vector<CompareResult> results(count);
  std::vector<char> done(count, 0);
  std::mutex mutex;
  std::condition_variable ready;
  std::atomic<size_t> next{0};
  unsigned workers = args.jobs > 0 ? static_cast<unsigned>(args.jobs)
                                   : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<size_t>(workers, std::max<size_t>(count, 1)));
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (size_t i = next++; i < count; i = next++) {
        CompareResult result = compare_one(entries[i], options);
        std::lock_guard<std::mutex> lock(mutex);
        results[i] = std::move(result);
        done[i] = 1;
        ready.notify_all();
      }
    });
  }
  bool all_ok = true;
  for (size_t i = 0; i < count; ++i) {
    std::unique_lock<std::mutex> lock(mutex);
    ready.wait(lock, [&] { return done[i] != 0; });
    std::cout << results[i].line << "\n" << std::flush;
    all_ok = all_ok && results[i].ok;
  }
  for (auto& t : pool) t.join();
  if (log_level() != LogLevel::kError) {
    std::cerr << "info: " << count << " instances, "
              << std::count_if(results.begin(), results.end(),
                               [](const CompareResult& r) { return r.ok; })
              << " agreed\n";
  }
  return all_ok ? 0 : 3;
}

struct BenchArgs {
  std::vector<int> sizes{5, 10, 15, 20, 25, 30};
  int per_size = 3;
  double density = 0.3;
  int cost_max = 100;
  std::uint64_t seed = 1;
};

int cmd_bench(const BenchArgs& args) {
  rrst_options options;
  rrst_default_options(&options);
  for (int n : args.sizes) {
    for (int i = 0; i < args.per_size; ++i) {
      const std::uint64_t seed = args.seed + 1000u * static_cast<std::uint64_t>(n) + i;
      const int k = n > 1 ? static_cast<int>(seed % static_cast<std::uint64_t>(n)) : 0;
      rrst_gen_params params{n, args.density, k, args.cost_max, seed};
      OwnedString json;
      if (rrst_status s = rrst_generate(&params, &json.text); s != RRST_OK) {
        return report_failure(s);
      }
      ProblemHandle problem;
      if (rrst_status s = rrst_problem_from_json(json.text, &problem.problem); s != RRST_OK) {
        return report_failure(s);
      }
      int nodes = 0;
      int edges = 0;
      rrst_problem_summary(problem.problem, &nodes, &edges, nullptr);
      const auto start = std::chrono::steady_clock::now();
      SolutionHandle solution;
      if (rrst_status s = rrst_solve(problem.problem, &options, 0, &solution.solution);
          s != RRST_OK) {
        return report_failure(s);
      }
      const double ms =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
              .count();
      rrst_stats stats;
      rrst_solution_stats(solution.solution, &stats);
      nlohmann::ordered_json row;
      row["n"] = nodes;
      row["m"] = edges;
      row["k"] = k;
      row["seed"] = seed;
      row["iterations"] = stats.iterations;
      row["lp_solves"] = stats.lp_solves;
      row["cuts_x"] = stats.cuts_x;
      row["cuts_y"] = stats.cuts_y;
      row["ms"] = ms;
      std::cout << row.dump() << "\n" << std::flush;
    }
  }
  return 0;
}

void add_solver_flags(CLI::App* cmd, SolveArgs& args) {
  cmd->add_option("--mode", args.mode, "Fixing mode")
      ->check(CLI::IsMember({"strict", "batch"}));
  cmd->add_option("--separation", args.separation, "Separation routine")
      ->check(CLI::IsMember({"mincut", "exhaustive"}));
  cmd->add_option("--cuts", args.cuts, "Cuts added per separation round")
      ->check(CLI::IsMember({"one", "all"}));
  cmd->add_option("--finish", args.finish, "Completion once E_Z is empty")
      ->check(CLI::IsMember({"greedy", "lp"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Robust recoverable spanning tree and matroid basis solver"};
  app.require_subcommand(1);
  app.set_version_flag("--version", rrst_version());

  SolveArgs solve_args;
  CLI::App* solve = app.add_subcommand("solve", "Solve an instance exactly");
  solve->add_option("--input", solve_args.input, "Instance JSON")->required();
  solve->add_option("--output", solve_args.output, "Solution JSON (default stdout)");
  add_solver_flags(solve, solve_args);
  solve->add_option("--lp-dump", solve_args.lp_dump, "Append every solved program here");
  solve->add_flag("--matroid", solve_args.matroid,
                  "Solve a graph instance through its graphic matroid");

  rrst_gen_params gen_params{5, 0.5, 0, 10, 1};
  std::string gen_output;
  CLI::App* gen = app.add_subcommand("gen", "Generate a random instance");
  gen->add_option("--nodes", gen_params.nodes, "Node count")->required();
  gen->add_option("--density", gen_params.density, "Extra edge probability");
  gen->add_option("--k", gen_params.k, "Recovery parameter");
  gen->add_option("--cost-max", gen_params.cost_max, "Largest integer cost");
  gen->add_option("--seed", gen_params.seed, "Random seed");
  gen->add_option("--output", gen_output, "Instance JSON (default stdout)");

  std::string verify_instance;
  std::string verify_solution;
  CLI::App* verify = app.add_subcommand("verify", "Check a solution against an instance");
  verify->add_option("--instance", verify_instance, "Instance JSON")->required();
  verify->add_option("--solution", verify_solution, "Solution JSON")->required();

  CompareArgs compare_args;
  CLI::App* compare = app.add_subcommand("compare", "Solver against brute force");
  compare->add_option("--suite", compare_args.suite, "Directory of instances or builtin-small");
  compare->add_option("--seeds", compare_args.seeds, "Seed range a..b of generated instances");
  compare->add_option("--nodes", compare_args.nodes, "Node count for --seeds");
  compare->add_option("--density", compare_args.density, "Density for --seeds");
  compare->add_option("--cost-max", compare_args.cost_max, "Largest cost for --seeds");
  compare->add_option("--jobs", compare_args.jobs, "Worker threads (default: all cores)");
  add_solver_flags(compare, compare_args.solve);

  std::string oracle_input;
  CLI::App* oracle = app.add_subcommand("oracle", "Brute-force optimum");
  oracle->add_option("--input", oracle_input, "Instance JSON")->required();

  BenchArgs bench_args;
  CLI::App* bench = app.add_subcommand("bench", "Solve random instances of growing size");
  bench->add_option("--sizes", bench_args.sizes, "Node counts")->delimiter(',');
  bench->add_option("--per-size", bench_args.per_size, "Instances per size");
  bench->add_option("--density", bench_args.density, "Extra edge probability");
  bench->add_option("--cost-max", bench_args.cost_max, "Largest integer cost");
  bench->add_option("--seed", bench_args.seed, "Base seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (*solve) return cmd_solve(solve_args);
  if (*gen) return cmd_gen(gen_params, gen_output);
  if (*verify) return cmd_verify(verify_instance, verify_solution);
  if (*compare) {
    if (compare_args.nodes < 1) {
      std::cerr << "error: --nodes must be >= 1\n";
      return 1;
    }
    return cmd_compare(compare_args);
  }
  if (*oracle) return cmd_oracle(oracle_input);
  if (*bench) return cmd_bench(bench_args);
  return 1;
}
