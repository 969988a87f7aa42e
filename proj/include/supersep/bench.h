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
// Experiment plumbing shared by the CLI and the acceptance suite: one-shot
// solves, threshold-procedure probes, and cartesian sweeps emitting CSV.

#ifndef SUPERSEP_BENCH_H_
#define SUPERSEP_BENCH_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "supersep/coverage.h"

namespace supersep {

struct RunRecord {
  std::string algorithm;
  int n = 0;
  int k = 0;
  int p = 0;
  double eps = 0.0;
  double beta = 0.0;
  std::uint64_t seed = 0;
  double value = 0.0;
  std::optional<double> opt;
  std::optional<double> ratio;  // value / opt; 1 when opt == 0.
  std::int64_t rounds = 0;
  std::int64_t queries = 0;
  double wall_ms = 0.0;
  std::string status = "ok";  // "ok" or "failure".
};

std::string CsvHeader();
std::string FormatCsvRow(const RunRecord& record);

inline constexpr const char* kSolveAlgorithms[] = {"greedy", "pgs", "lstpgs",
                                                   "lalst"};
inline constexpr const char* kProbeAlgorithms[] = {"tbs-probe", "ts-probe"};

bool IsSolveAlgorithm(const std::string& name);
bool IsProbeAlgorithm(const std::string& name);

struct SolveOptions {
  std::string algorithm = "lstpgs";
  int k = 1;
  double eps = 0.1;
  double beta = 0.9;
  double eps_bar = 0.1;
  std::string provider = "greedy";
  std::uint64_t seed = 0;
  bool with_opt = false;
};

// Runs one algorithm on the instance. "pgs" takes its (gamma, alpha) from
// the bound provider on the whole ground set. Throws std::invalid_argument on
// parameter contract violations and CapExceededError when with_opt is set
// on an instance above the brute-force cap.
RunRecord SolveInstance(const CoverageInstance& instance,
                        const SolveOptions& options);

// q elements, each covering one uniformly random point of a unit-weight
// universe. Marginal gains are 0 or 1, so tau = 1 separates them.
CoverageInstance PointCollisionInstance(int q, int universe,
                                        std::uint64_t seed);

struct ProbeConfig {
  int q = 2000;
  int universe = 500;
  double eps = 0.25;
  double delta = 0.1;
  std::uint64_t seed = 0;
};

// "tbs-probe" or "ts-probe" with tau = 1 and k_cap = q. value is g(T).
RunRecord RunProbe(const std::string& algorithm, const ProbeConfig& config);

struct SweepSpec {
  std::vector<int> n;
  std::vector<int> k;
  std::vector<int> p;
  std::vector<double> eps;
  std::vector<double> beta;
  std::vector<std::uint64_t> seeds;
  std::vector<std::string> algorithms;
  int universe_factor = 2;  // Universe size = factor * n.
  int set_size_min = 1;
  int set_size_max = 5;
  double weight_min = 1.0;
  double weight_max = 10.0;
  int probe_universe = 500;  // n plays the role of q for probes.
  double probe_delta = 0.1;
  bool with_opt = false;
  int threads = 1;
};

// One record per cell of the cartesian product, in a fixed cell order.
// A failing cell is recorded with status "failure" and does not stop the
// sweep.
std::vector<RunRecord> RunSweep(const SweepSpec& spec);

struct SummaryRow {
  std::string algorithm;
  int n = 0;
  int k = 0;
  int p = 0;
  double eps = 0.0;
  double beta = 0.0;
  int runs = 0;
  int failures = 0;
  double mean_value = 0.0;
  std::optional<double> mean_ratio;
  double mean_rounds = 0.0;
  double mean_queries = 0.0;
};

// Groups records by everything but the seed, in first-appearance order.
std::vector<SummaryRow> Summarize(const std::vector<RunRecord>& records);
std::string SummaryHeader();
std::string FormatSummaryRow(const SummaryRow& row);

}  // namespace supersep

#endif  // SUPERSEP_BENCH_H_
