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
#include "supersep/bench.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <map>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "supersep/baselines.h"
#include "supersep/exact.h"
#include "supersep/lalst.h"
#include "supersep/lstpgs.h"
#include "supersep/pgs.h"
#include "supersep/tbs.h"

namespace supersep {
namespace {

std::string Num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

std::string Opt(const std::optional<double>& v) {
  return v ? Num(*v) : std::string();
}

double Millis(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - since)
      .count();
}

std::vector<ElementId> Iota(int n) {
  std::vector<ElementId> ids(n);
  std::iota(ids.begin(), ids.end(), 0);
  return ids;
}

}  // namespace

std::string CsvHeader() {
  return "algorithm,n,k,p,eps,beta,seed,value,opt,ratio,rounds,queries,"
         "wall_ms,status";
}

std::string FormatCsvRow(const RunRecord& r) {
  return r.algorithm + "," + std::to_string(r.n) + "," + std::to_string(r.k) +
         "," + std::to_string(r.p) + "," + Num(r.eps) + "," + Num(r.beta) +
         "," + std::to_string(r.seed) + "," + Num(r.value) + "," + Opt(r.opt) +
         "," + Opt(r.ratio) + "," + std::to_string(r.rounds) + "," +
         std::to_string(r.queries) + "," + Num(r.wall_ms) + "," + r.status;
}

bool IsSolveAlgorithm(const std::string& name) {
  return std::find(std::begin(kSolveAlgorithms), std::end(kSolveAlgorithms),
                   name) != std::end(kSolveAlgorithms);
}

bool IsProbeAlgorithm(const std::string& name) {
  return std::find(std::begin(kProbeAlgorithms), std::end(kProbeAlgorithms),
                   name) != std::end(kProbeAlgorithms);
}

RunRecord SolveInstance(const CoverageInstance& instance,
                        const SolveOptions& o) {
  if (!IsSolveAlgorithm(o.algorithm)) {
    throw std::invalid_argument("unknown algorithm: " + o.algorithm);
  }
  if (o.k < 0) throw std::invalid_argument("k must be >= 0");
  const int n = instance.n();
  if (o.with_opt && n > BruteForceCap()) {
    throw CapExceededError("--with-opt needs n <= " +
                           std::to_string(BruteForceCap()) + ", got " +
                           std::to_string(n));
  }
  auto fn = std::make_shared<CoverageFunction>(instance);
  InstrumentedOracle oracle(fn);
  Rng rng(o.seed);
  const int k = std::min(o.k, n);
  const std::vector<ElementId> ground = Iota(n);

  RunRecord rec;
  rec.algorithm = o.algorithm;
  rec.n = n;
  rec.k = o.k;
  rec.p = std::max(instance.p, 1);
  rec.eps = o.eps;
  rec.beta = o.beta;
  rec.seed = o.seed;

  const auto start = std::chrono::steady_clock::now();
  ElementSet solution;
  if (o.algorithm == "greedy") {
    solution = Greedy(oracle, ground, k).set;
  } else if (o.algorithm == "pgs") {
    auto provider = MakeBoundProvider(o.provider);
    PgsParams params;
    params.p = rec.p;
    params.k = k;
    params.eps = o.eps;
    ValidatePgsParams(params);
    std::vector<double> values = SingletonValues(oracle, ground);
    BoundEstimate bound = provider->Provide(oracle, ground, k, values);
    params.alpha = bound.alpha0;
    params.gamma = bound.gamma;
    PgsResult res = ParallelGreedySample(oracle, ground, params, rng,
                                         std::span<const double>(values));
    solution = std::move(res.solution);
    if (res.trace.status == RunStatus::kFailure) rec.status = "failure";
  } else if (o.algorithm == "lstpgs") {
    auto provider = MakeBoundProvider(o.provider);
    LstpgsConfig config;
    config.p = rec.p;
    config.k = k;
    config.beta = o.beta;
    config.eps_bar = o.eps_bar;
    config.eps = o.eps;
    LstpgsResult res = LstPgs(oracle, config, *provider, rng);
    solution = std::move(res.solution);
    if (res.trace.pgs.status == RunStatus::kFailure) rec.status = "failure";
  } else {
    GreedySubsolver subsolver;
    solution = Lalst(oracle, rec.p, k, o.beta, o.eps, subsolver).solution;
  }
  rec.wall_ms = Millis(start);
  const QueryLedger used = oracle.Snapshot();
  rec.rounds = used.rounds;
  rec.queries = used.queries;
  rec.value = CoverageValue(instance, solution);
  if (o.with_opt) {
    rec.opt = BruteForceOpt(*fn, k).value;
    rec.ratio = *rec.opt > 0.0 ? rec.value / *rec.opt : 1.0;
  }
  return rec;
}

CoverageInstance PointCollisionInstance(int q, int universe,
                                        std::uint64_t seed) {
  if (q < 1 || universe < 1) {
    throw std::invalid_argument("q and universe must be positive");
  }
  Rng rng(seed);
  CoverageInstance inst;
  inst.universe_weights.assign(universe, 1.0);
  inst.sets.resize(q);
  for (auto& s : inst.sets) s.push_back(static_cast<int>(rng.UniformInt(universe)));
  inst.p = MaxFrequency(inst);
  return inst;
}

RunRecord RunProbe(const std::string& algorithm, const ProbeConfig& c) {
  if (!IsProbeAlgorithm(algorithm)) {
    throw std::invalid_argument("unknown probe: " + algorithm);
  }
  Rng rng(c.seed);
  const CoverageInstance inst =
      PointCollisionInstance(c.q, c.universe, rng.Next());
  InstrumentedOracle g(std::make_shared<CoverageFunction>(inst));
  TbsParams params;
  params.max_size = c.q;
  params.k_cap = c.q;
  params.eps = c.eps;
  params.delta = c.delta;
  params.tau = 1.0;
  const std::vector<ElementId> ground = Iota(c.q);

  RunRecord rec;
  rec.algorithm = algorithm;
  rec.n = c.q;
  rec.k = c.q;
  rec.p = inst.p;
  rec.eps = c.eps;
  rec.seed = c.seed;
  const auto start = std::chrono::steady_clock::now();
  TbsOutcome out = algorithm == "tbs-probe"
                       ? ThresholdBlockSeq(g, ground, params, rng)
                       : ThresholdSeq(g, ground, params, rng);
  rec.wall_ms = Millis(start);
  rec.rounds = out.used.rounds;
  rec.queries = out.used.queries;
  rec.value = CoverageValue(inst, out.set);
  rec.status = out.status == TbsStatus::kFailure ? "failure" : "ok";
  return rec;
}

std::vector<RunRecord> RunSweep(const SweepSpec& spec) {
  struct Cell {
    std::string algorithm;
    int n, k, p;
    double eps, beta;
    std::uint64_t seed;
  };
  std::vector<Cell> cells;
  for (const auto& alg : spec.algorithms)
    for (int n : spec.n)
      for (int k : spec.k)
        for (int p : spec.p)
          for (double eps : spec.eps)
            for (double beta : spec.beta)
              for (std::uint64_t seed : spec.seeds)
                cells.push_back({alg, n, k, p, eps, beta, seed});

  auto run_cell = [&spec](const Cell& c) {
    RunRecord rec;
    rec.algorithm = c.algorithm;
    rec.n = c.n;
    rec.k = c.k;
    rec.p = c.p;
    rec.eps = c.eps;
    rec.beta = c.beta;
    rec.seed = c.seed;
    try {
      if (IsProbeAlgorithm(c.algorithm)) {
        ProbeConfig pc;
        pc.q = c.n;
        pc.universe = spec.probe_universe;
        pc.eps = c.eps;
        pc.delta = spec.probe_delta;
        pc.seed = c.seed;
        rec = RunProbe(c.algorithm, pc);
        rec.k = c.k;
        rec.beta = c.beta;
        return rec;
      }
      GeneratorConfig gc;
      gc.n = c.n;
      gc.universe_size = spec.universe_factor * c.n;
      gc.p_target = c.p;
      gc.set_size_min = spec.set_size_min;
      gc.set_size_max = spec.set_size_max;
      gc.weight_min = spec.weight_min;
      gc.weight_max = spec.weight_max;
      gc.seed = c.seed;
      SolveOptions so;
      so.algorithm = c.algorithm;
      so.k = c.k;
      so.eps = c.eps;
      so.beta = c.beta;
      so.seed = c.seed;
      so.with_opt = spec.with_opt && c.n <= BruteForceCap();
      RunRecord solved = SolveInstance(GenerateCoverage(gc), so);
      // Keep the sweep's p (the generator target) so cells group cleanly.
      solved.p = c.p;
      return solved;
    } catch (const std::exception&) {
      rec.status = "failure";
      return rec;
    }
  };

  std::vector<RunRecord> records(cells.size());
  const int threads =
      std::max(1, std::min<int>(spec.threads, static_cast<int>(cells.size())));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) {
      records[i] = run_cell(cells[i]);
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return records;
}

std::vector<SummaryRow> Summarize(const std::vector<RunRecord>& records) {
  using Key = std::tuple<std::string, int, int, int, double, double>;
  std::map<Key, std::size_t> index;
  std::vector<SummaryRow> rows;
  std::vector<int> ratio_counts;
  for (const RunRecord& r : records) {
    Key key{r.algorithm, r.n, r.k, r.p, r.eps, r.beta};
    auto [it, inserted] = index.try_emplace(key, rows.size());
    if (inserted) {
      SummaryRow row;
      row.algorithm = r.algorithm;
      row.n = r.n;
      row.k = r.k;
      row.p = r.p;
      row.eps = r.eps;
      row.beta = r.beta;
      rows.push_back(row);
      ratio_counts.push_back(0);
    }
    SummaryRow& row = rows[it->second];
    ++row.runs;
    if (r.status != "ok") ++row.failures;
    row.mean_value += r.value;
    row.mean_rounds += static_cast<double>(r.rounds);
    row.mean_queries += static_cast<double>(r.queries);
    if (r.ratio) {
      row.mean_ratio = row.mean_ratio.value_or(0.0) + *r.ratio;
      ++ratio_counts[it->second];
    }
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    SummaryRow& row = rows[i];
    row.mean_value /= row.runs;
    row.mean_rounds /= row.runs;
    row.mean_queries /= row.runs;
    if (row.mean_ratio) *row.mean_ratio /= ratio_counts[i];
  }
  return rows;
}

std::string SummaryHeader() {
  return "algorithm,n,k,p,eps,beta,runs,failures,mean_value,mean_ratio,"
         "mean_rounds,mean_queries";
}

std::string FormatSummaryRow(const SummaryRow& r) {
  return r.algorithm + "," + std::to_string(r.n) + "," + std::to_string(r.k) +
         "," + std::to_string(r.p) + "," + Num(r.eps) + "," + Num(r.beta) +
         "," + std::to_string(r.runs) + "," + std::to_string(r.failures) + "," +
         Num(r.mean_value) + "," + Opt(r.mean_ratio) + "," +
         Num(r.mean_rounds) + "," + Num(r.mean_queries);
}

}  // namespace supersep
