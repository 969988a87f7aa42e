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
//
// supersep: gen | solve | verify | bench.
// Exit codes: 0 ok, 1 property violation, 2 usage or cap, 3 algorithm failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "supersep/bench.h"
#include "supersep/coverage.h"
#include "supersep/exact.h"

namespace {

using namespace supersep;

constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitFailure = 3;

nlohmann::json WitnessJson(const Witness& w) {
  nlohmann::json j = {{"property", w.property},
                      {"A", w.a},
                      {"B", w.b},
                      {"slack", w.slack}};
  if (w.x) j["x"] = *w.x;
  return j;
}

std::string SetText(const ElementSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    out += (i ? "," : "") + std::to_string(s[i]);
  }
  return out + "}";
}

int RunGen(const GeneratorConfig& config, const std::string& out) {
  CoverageInstance inst = GenerateCoverage(config);
  StoreInstance(inst, out);
  std::cout << "n=" << inst.n() << " universe=" << inst.universe_weights.size()
            << " p=" << inst.p << "\n";
  return 0;
}

int RunSolve(const std::string& path, const SolveOptions& options,
             bool header) {
  RunRecord rec = SolveInstance(LoadInstance(path), options);
  if (header) std::cout << CsvHeader() << "\n";
  std::cout << FormatCsvRow(rec) << "\n";
  return rec.status == "ok" ? 0 : kExitFailure;
}

struct VerifyRequest {
  std::optional<double> supersep;
  std::optional<double> subset_supersep;
  bool submodular = false;
  bool min_p = false;
};

int RunVerify(const std::string& path, const VerifyRequest& req) {
  CoverageFunction f(LoadInstance(path));
  nlohmann::json report = nlohmann::json::object();
  bool violated = false;

  auto record = [&](const std::string& name, const PropertyReport& r) {
    nlohmann::json j = {{"holds", r.holds}};
    std::cout << name << ": " << (r.holds ? "holds" : "VIOLATED");
    if (r.witness) {
      j["witness"] = WitnessJson(*r.witness);
      std::cout << " (A=" << SetText(r.witness->a);
      if (!r.witness->b.empty()) std::cout << " B=" << SetText(r.witness->b);
      if (r.witness->x) std::cout << " x=" << *r.witness->x;
      std::cout << " slack=" << r.witness->slack << ")";
    }
    std::cout << "\n";
    report[name] = j;
    violated |= !r.holds;
  };

  if (req.submodular) record("submodular", CheckSubmodularMonotone(f));
  if (req.supersep) {
    record("supersep", CheckPSuperseparable(f, *req.supersep));
  }
  if (req.subset_supersep) {
    record("subset_supersep",
           CheckSubsetSuperseparable(f, *req.subset_supersep));
  }
  if (req.min_p) {
    MinSupersepResult r = MinSupersepP(f);
    nlohmann::json j;
    if (r.p) {
      j["p"] = *r.p;
      std::cout << "min_p: " << *r.p << "\n";
    } else {
      j["p"] = nullptr;
      std::cout << "min_p: none (no finite p)\n";
    }
    if (r.witness) j["witness"] = WitnessJson(*r.witness);
    report["min_p"] = j;
  }
  std::cout << report.dump() << "\n";
  return violated ? kExitViolation : 0;
}

int RunBench(const SweepSpec& spec, const std::string& out,
             const std::string& summary) {
  std::vector<RunRecord> records = RunSweep(spec);
  std::ofstream csv(out);
  if (!csv) throw std::runtime_error("cannot write " + out);
  csv << CsvHeader() << "\n";
  for (const RunRecord& r : records) csv << FormatCsvRow(r) << "\n";
  if (!summary.empty()) {
    std::ofstream sum(summary);
    if (!sum) throw std::runtime_error("cannot write " + summary);
    sum << SummaryHeader() << "\n";
    for (const SummaryRow& row : Summarize(records)) {
      sum << FormatSummaryRow(row) << "\n";
    }
  }
  std::cout << records.size() << " runs written to " << out << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Parallel submodular maximization toolkit"};
  app.require_subcommand(1);

  GeneratorConfig gen;
  std::string gen_out;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a coverage instance");
  gen_cmd->add_option("--n", gen.n, "Ground set size")->required();
  gen_cmd->add_option("--universe", gen.universe_size, "Universe size")
      ->required();
  gen_cmd->add_option("--p", gen.p_target, "Maximum element frequency")
      ->required();
  gen_cmd->add_option("--set-min", gen.set_size_min, "Smallest set size");
  gen_cmd->add_option("--set-max", gen.set_size_max, "Largest set size");
  gen_cmd->add_option("--weight-min", gen.weight_min, "Smallest point weight");
  gen_cmd->add_option("--weight-max", gen.weight_max, "Largest point weight");
  gen_cmd->add_option("--seed", gen.seed, "Random seed");
  gen_cmd->add_option("--out", gen_out, "Output path")->required();

  SolveOptions solve;
  std::string solve_path;
  bool solve_header = false;
  auto* solve_cmd = app.add_subcommand("solve", "Run one algorithm");
  solve_cmd->add_option("instance", solve_path, "Instance file")->required();
  solve_cmd->add_option("--alg", solve.algorithm, "greedy|pgs|lstpgs|lalst")
      ->check(CLI::IsMember({"greedy", "pgs", "lstpgs", "lalst"}));
  solve_cmd->add_option("--k", solve.k, "Cardinality budget")->required();
  solve_cmd->add_option("--eps", solve.eps, "Accuracy parameter");
  solve_cmd->add_option("--beta", solve.beta, "Top-element fraction");
  solve_cmd->add_option("--eps-bar", solve.eps_bar, "Bound accuracy");
  solve_cmd->add_option("--provider", solve.provider, "greedy|singleton")
      ->check(CLI::IsMember({"greedy", "singleton"}));
  solve_cmd->add_option("--seed", solve.seed, "Random seed");
  solve_cmd->add_flag("--with-opt", solve.with_opt,
                      "Brute-force OPT and ratio (small n only)");
  solve_cmd->add_flag("--header", solve_header, "Print the CSV header first");

  VerifyRequest verify;
  std::string verify_path;
  auto* verify_cmd = app.add_subcommand("verify", "Exhaustive property checks");
  verify_cmd->add_option("instance", verify_path, "Instance file")->required();
  verify_cmd->add_option("--supersep", verify.supersep,
                         "Check p-superseparability for this p");
  verify_cmd->add_option("--subset-supersep", verify.subset_supersep,
                         "Check the subset form for this p");
  verify_cmd->add_flag("--submodular", verify.submodular,
                       "Check monotone submodularity");
  verify_cmd->add_flag("--min-p", verify.min_p,
                       "Report the smallest valid p");

  SweepSpec sweep;
  sweep.k = {5};
  sweep.p = {2};
  sweep.eps = {0.1};
  sweep.beta = {0.9};
  sweep.seeds = {1};
  std::string bench_out, bench_summary;
  auto* bench_cmd = app.add_subcommand("bench", "Cartesian benchmark sweep");
  bench_cmd->add_option("--n", sweep.n, "Ground sizes (q for probes)")
      ->delimiter(',');
  bench_cmd->add_option("--k", sweep.k, "Budgets")->delimiter(',');
  bench_cmd->add_option("--p", sweep.p, "Frequency targets")->delimiter(',');
  bench_cmd->add_option("--eps", sweep.eps, "Accuracy values")->delimiter(',');
  bench_cmd->add_option("--beta", sweep.beta, "Beta values")->delimiter(',');
  bench_cmd->add_option("--seeds", sweep.seeds, "Seeds")->delimiter(',');
  bench_cmd
      ->add_option("--algs", sweep.algorithms,
                   "greedy,pgs,lstpgs,lalst,tbs-probe,ts-probe")
      ->delimiter(',')
      ->check(CLI::IsMember({"greedy", "pgs", "lstpgs", "lalst", "tbs-probe",
                             "ts-probe"}));
  bench_cmd->add_option("--probe-universe", sweep.probe_universe,
                        "Universe size of the probe oracle");
  bench_cmd->add_option("--threads", sweep.threads, "Worker threads");
  bench_cmd->add_flag("--with-opt", sweep.with_opt,
                      "Brute-force OPT where n is small enough");
  bench_cmd->add_option("--out", bench_out, "CSV output path")->required();
  bench_cmd->add_option("--summary", bench_summary, "Per-cell summary CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*gen_cmd) return RunGen(gen, gen_out);
    if (*solve_cmd) return RunSolve(solve_path, solve, solve_header);
    if (*verify_cmd) return RunVerify(verify_path, verify);
    if (*bench_cmd) return RunBench(sweep, bench_out, bench_summary);
  } catch (const std::exception& e) {
    // Contract violations, cap overruns, unreadable or inconsistent input.
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return 0;
}
