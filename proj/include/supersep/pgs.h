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
// Parallel greedy sampling: a diminishing-threshold greedy for
// p-superseparable objectives. At each threshold it either draws the rest of
// the solution uniformly from a large pool of high-value elements (no oracle
// interaction at all) or falls back to ThresholdBlockSeq on a pool whose size
// is bounded independently of n.

#ifndef SUPERSEP_PGS_H_
#define SUPERSEP_PGS_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "supersep/oracle.h"
#include "supersep/rng.h"
#include "supersep/tbs.h"

namespace supersep {

struct PgsParams {
  int p = 1;           // Superseparability parameter of f.
  int k = 1;           // Cardinality budget.
  double alpha = 1.0;  // In (0, 1]; the caller guarantees gamma <= OPT <= gamma / alpha.
  double gamma = 0.0;  // >= 0.
  double eps = 0.1;    // In (0, 1 - 1/e).
};

void ValidatePgsParams(const PgsParams& params);

// (1-eps)^i * gamma / (alpha k).
double ThresholdAt(int i, double gamma, double alpha, int k, double eps);

// p k / ((1-eps)^i eps / 2) + k - solution_size - 1, compared against pool
// sizes as a real number.
double SampleFloor(int i, int p, int k, double eps, int solution_size);

// 3 p k / (alpha eps / 2) + k - 1; bounds every pool handed to
// ThresholdBlockSeq.
double MaxSampleFloor(int p, int k, double alpha, double eps);

// |S| < k and tau >= gamma / ((1-eps) 3 k), boundary inclusive. 'tau' is the
// threshold of the iteration just completed (tau_0 on entry).
bool WhileGuard(int solution_size, double tau, double gamma, int k,
                double eps);

// ceil(log_{1-eps}(alpha/3)), the most loop iterations that can execute.
int IterationCap(double alpha, double eps);

// f(x) for each x in ground, as one round of |ground| queries.
std::vector<double> SingletonValues(InstrumentedOracle& f,
                                    std::span<const ElementId> ground);

enum class PgsBranch { kSample, kTbs };
enum class RunStatus { kOk, kFailure };

const char* ToString(PgsBranch branch);
const char* ToString(RunStatus status);

struct PgsIteration {
  int i = 0;
  double tau = 0.0;
  std::int64_t pool_size = 0;
  double sample_floor = 0.0;
  PgsBranch branch = PgsBranch::kSample;
  ElementSet solution_before;
  ElementSet added;  // Ordered as drawn (Sample) or inserted (Tbs).
  QueryLedger used;
  std::optional<TbsStatus> tbs_status;
  bool tbs_value_bound_ok = true;
};

struct PgsTrace {
  std::vector<PgsIteration> iterations;
  RunStatus status = RunStatus::kOk;
  double tau0 = 0.0;
  double max_sample_floor = 0.0;
  double delta = 0.0;
  int iteration_cap = 0;
  bool reused_singletons = false;
  QueryLedger singleton_used;
  QueryLedger used;  // Whole call, including the singleton round.
};

struct PgsResult {
  ElementSet solution;
  PgsTrace trace;
};

// Runs on 'ground' (normally the whole ground set). When 'singletons' is
// given it must hold f(x) for each ground element in the same order; the
// initial singleton round is then skipped. A ThresholdBlockSeq failure stops
// the run with status kFailure and the partial solution.
PgsResult ParallelGreedySample(
    InstrumentedOracle& f, std::span<const ElementId> ground,
    const PgsParams& params, Rng& rng,
    std::optional<std::span<const double>> singletons = std::nullopt);

}  // namespace supersep

#endif  // SUPERSEP_PGS_H_
