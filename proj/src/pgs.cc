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
#include "supersep/pgs.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace supersep {

void ValidatePgsParams(const PgsParams& p) {
  if (p.p < 1) throw std::invalid_argument("p must be >= 1");
  if (p.k < 0) throw std::invalid_argument("k must be >= 0");
  if (!(p.alpha > 0.0 && p.alpha <= 1.0)) {
    throw std::invalid_argument("alpha must lie in (0, 1]");
  }
  if (!(p.gamma >= 0.0) || !std::isfinite(p.gamma)) {
    throw std::invalid_argument("gamma must be finite and >= 0");
  }
  if (!(p.eps > 0.0 && p.eps < 1.0 - std::exp(-1.0))) {
    throw std::invalid_argument("eps must lie in (0, 1 - 1/e)");
  }
}

double ThresholdAt(int i, double gamma, double alpha, int k, double eps) {
  return std::pow(1.0 - eps, i) * gamma / (alpha * k);
}

double SampleFloor(int i, int p, int k, double eps, int solution_size) {
  return static_cast<double>(p) * k / (std::pow(1.0 - eps, i) * eps / 2.0) +
         k - solution_size - 1;
}

double MaxSampleFloor(int p, int k, double alpha, double eps) {
  return 3.0 * p * k / (alpha * eps / 2.0) + k - 1;
}

bool WhileGuard(int solution_size, double tau, double gamma, int k,
                double eps) {
  return solution_size < k && tau >= gamma / ((1.0 - eps) * 3.0 * k);
}

int IterationCap(double alpha, double eps) {
  return static_cast<int>(
      std::ceil(std::log(alpha / 3.0) / std::log(1.0 - eps)));
}

std::vector<double> SingletonValues(InstrumentedOracle& f,
                                    std::span<const ElementId> ground) {
  std::vector<ElementSet> singletons;
  singletons.reserve(ground.size());
  for (ElementId x : ground) singletons.push_back({x});
  return f.EvalBatch(singletons);
}

const char* ToString(PgsBranch branch) {
  return branch == PgsBranch::kSample ? "sample" : "tbs";
}

const char* ToString(RunStatus status) {
  return status == RunStatus::kOk ? "ok" : "failure";
}

PgsResult ParallelGreedySample(
    InstrumentedOracle& f, std::span<const ElementId> ground,
    const PgsParams& params, Rng& rng,
    std::optional<std::span<const double>> singletons) {
  ValidatePgsParams(params);
  const QueryLedger start = f.Snapshot();
  const int k = params.k;
  const double n = static_cast<double>(ground.size());

  PgsResult out;
  PgsTrace& trace = out.trace;
  trace.max_sample_floor =
      MaxSampleFloor(params.p, k, params.alpha, params.eps);
  trace.delta =
      std::log(1.0 - params.eps) / std::log(params.alpha / 3.0);
  trace.iteration_cap = IterationCap(params.alpha, params.eps);

  std::vector<double> values;
  if (singletons) {
    if (singletons->size() != ground.size()) {
      throw std::invalid_argument("singleton values do not match ground set");
    }
    values.assign(singletons->begin(), singletons->end());
    trace.reused_singletons = true;
  } else {
    values = SingletonValues(f, ground);
  }
  trace.singleton_used = f.Snapshot() - start;

  // Ascending id order, so pools are built deterministically.
  std::vector<std::size_t> order(ground.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return ground[a] < ground[b]; });

  auto done = [&] {
    trace.used = f.Snapshot() - start;
    return std::move(out);
  };
  if (k == 0 || params.gamma <= 0.0) {
    // gamma = 0 certifies OPT = 0, so the empty set is optimal.
    trace.tau0 = 0.0;
    return done();
  }

  std::vector<char> in_s(f.ground_size(), 0);
  ElementSet& s = out.solution;
  int i = 0;
  double tau = ThresholdAt(0, params.gamma, params.alpha, k, params.eps);
  trace.tau0 = tau;
  const double tbs_max_size = std::min(trace.max_sample_floor, n);

  while (WhileGuard(static_cast<int>(s.size()), tau, params.gamma, k,
                    params.eps)) {
    ++i;
    tau = ThresholdAt(i, params.gamma, params.alpha, k, params.eps);
    const QueryLedger iter_start = f.Snapshot();

    std::vector<ElementId> pool;
    for (std::size_t idx : order) {
      const ElementId x = ground[idx];
      if (!in_s[x] && values[idx] >= tau) pool.push_back(x);
    }

    PgsIteration rec;
    rec.i = i;
    rec.tau = tau;
    rec.pool_size = static_cast<std::int64_t>(pool.size());
    rec.sample_floor =
        SampleFloor(i, params.p, k, params.eps, static_cast<int>(s.size()));
    rec.solution_before = s;

    const std::size_t need = static_cast<std::size_t>(k) - s.size();
    if (static_cast<double>(pool.size()) >= rec.sample_floor) {
      rec.branch = PgsBranch::kSample;
      rec.added = rng.SampleWithoutReplacement<ElementId>(pool, need);
    } else {
      rec.branch = PgsBranch::kTbs;
      InstrumentedOracle view = f.Restrict(s);
      TbsParams tp;
      tp.max_size = tbs_max_size;
      tp.k_cap = static_cast<int>(need);
      tp.eps = params.eps / 3.0;
      tp.delta = trace.delta;
      tp.tau = tau;
      TbsOutcome tbs = ThresholdBlockSeq(view, pool, tp, rng);
      rec.tbs_status = tbs.status;
      rec.tbs_value_bound_ok = tbs.value_bound_ok;
      rec.added = std::move(tbs.set);
    }
    rec.used = f.Snapshot() - iter_start;
    for (ElementId x : rec.added) {
      s.push_back(x);
      in_s[x] = 1;
    }
    const bool failed = rec.tbs_status == TbsStatus::kFailure;
    trace.iterations.push_back(std::move(rec));
    if (failed) {
      trace.status = RunStatus::kFailure;
      break;
    }
  }
  return done();
}

}  // namespace supersep
