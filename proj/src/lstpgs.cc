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
#include "supersep/lstpgs.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "supersep/baselines.h"

namespace supersep {

BoundEstimate GreedyBoundProvider::Provide(InstrumentedOracle& f,
                                           std::span<const ElementId> ground,
                                           int k, std::span<const double>) {
  if (k == 0) return {0.0, 1.0};
  GreedyResult g = Greedy(f, ground, k);
  return {g.value, 1.0 - std::exp(-1.0)};
}

BoundEstimate SingletonBoundProvider::Provide(
    InstrumentedOracle&, std::span<const ElementId>, int k,
    std::span<const double> singletons) {
  if (k == 0 || singletons.empty()) return {0.0, 1.0};
  const double best = *std::max_element(singletons.begin(), singletons.end());
  return {best, 1.0 / k};
}

std::unique_ptr<BoundProvider> MakeBoundProvider(const std::string& name) {
  if (name == "greedy") return std::make_unique<GreedyBoundProvider>();
  if (name == "singleton") return std::make_unique<SingletonBoundProvider>();
  throw std::invalid_argument("unknown bound provider: " + name);
}

std::int64_t TopCount(int n, int p, int k, double beta) {
  if (!(beta > 0.0 && beta < 1.0)) {
    throw std::invalid_argument("beta must lie in (0, 1)");
  }
  // Shave off rounding noise so that e.g. 4 / (1 - 0.9) + 2 counts as 42.
  const double exact = static_cast<double>(p) * k / (1.0 - beta) + k;
  const double raw = std::ceil(exact - 1e-9 * std::max(1.0, exact));
  return static_cast<std::int64_t>(std::min(raw, static_cast<double>(n)));
}

TopSelection SelectTopElements(InstrumentedOracle& f, int p, int k,
                               double beta) {
  const int n = f.ground_size();
  const std::int64_t count = TopCount(n, p, k, beta);
  std::vector<ElementId> all(n);
  std::iota(all.begin(), all.end(), 0);

  TopSelection out;
  out.all_values = SingletonValues(f, all);
  std::stable_sort(all.begin(), all.end(), [&](ElementId a, ElementId b) {
    return out.all_values[a] > out.all_values[b];
  });
  all.resize(count);
  out.elements = std::move(all);
  for (ElementId x : out.elements) out.values.push_back(out.all_values[x]);
  return out;
}

double LinearSeqAlpha(double eps_bar) {
  if (!(eps_bar > 0.0 && eps_bar < 0.5)) {
    throw std::invalid_argument("eps_bar must lie in (0, 1/2)");
  }
  const double e = eps_bar;
  return 1.0 / (4.0 + 4.0 * (2.0 - e) * e / ((1.0 - e) * (1.0 - 2.0 * e)));
}

double AlphaFor(double beta, bool restricted, double alpha0) {
  return restricted ? beta * alpha0 : alpha0;
}

void ValidateLstpgsConfig(const LstpgsConfig& c) {
  if (c.p < 1) throw std::invalid_argument("p must be >= 1");
  if (c.k < 0) throw std::invalid_argument("k must be >= 0");
  if (!(c.beta > 0.0 && c.beta < 1.0)) {
    throw std::invalid_argument("beta must lie in (0, 1)");
  }
  if (!(c.eps_bar > 0.0 && c.eps_bar < 0.5)) {
    throw std::invalid_argument("eps_bar must lie in (0, 1/2)");
  }
  if (!(c.eps > 0.0 && c.eps < 1.0 - std::exp(-1.0))) {
    throw std::invalid_argument("eps must lie in (0, 1 - 1/e)");
  }
}

LstpgsResult LstPgs(InstrumentedOracle& f, const LstpgsConfig& config,
                    BoundProvider& provider, Rng& rng) {
  ValidateLstpgsConfig(config);
  const int n = f.ground_size();
  const int k = std::min(config.k, n);
  const QueryLedger start = f.Snapshot();

  LstpgsResult out;
  LstpgsTrace& trace = out.trace;
  TopSelection top = SelectTopElements(f, config.p, k, config.beta);
  trace.top_used = f.Snapshot() - start;
  trace.top_count = static_cast<std::int64_t>(top.elements.size());
  trace.restricted = trace.top_count < n;
  trace.provider = provider.name();

  const QueryLedger before_provider = f.Snapshot();
  trace.bound = provider.Provide(f, top.elements, k, top.values);
  trace.provider_used = f.Snapshot() - before_provider;
  trace.alpha = AlphaFor(config.beta, trace.restricted, trace.bound.alpha0);

  std::vector<ElementId> ground(n);
  std::iota(ground.begin(), ground.end(), 0);
  PgsParams params;
  params.p = config.p;
  params.k = k;
  params.alpha = trace.alpha;
  params.gamma = trace.bound.gamma;
  params.eps = config.eps;
  PgsResult pgs = ParallelGreedySample(
      f, ground, params, rng, std::span<const double>(top.all_values));
  out.solution = std::move(pgs.solution);
  trace.pgs = std::move(pgs.trace);
  trace.used = f.Snapshot() - start;
  return out;
}

}  // namespace supersep
