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
// Top-level pipeline: shrink to the top-valued elements, get a (gamma,
// alpha0) sandwich on OPT from a bound provider run on that shrunken set, and
// hand the adjusted bound to ParallelGreedySample on the full ground set.

#ifndef SUPERSEP_LSTPGS_H_
#define SUPERSEP_LSTPGS_H_

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "supersep/oracle.h"
#include "supersep/pgs.h"
#include "supersep/rng.h"

namespace supersep {

// Gamma <= OPT(ground) <= gamma / alpha0.
struct BoundEstimate {
  double gamma = 0.0;
  double alpha0 = 1.0;
};

class BoundProvider {
 public:
  virtual ~BoundProvider() = default;
  virtual std::string name() const = 0;
  // 'singletons' holds f(x) for each element of 'ground', already paid for.
  virtual BoundEstimate Provide(InstrumentedOracle& f,
                                std::span<const ElementId> ground, int k,
                                std::span<const double> singletons) = 0;
};

// Gamma = f(greedy solution), alpha0 = 1 - 1/e. Costs k rounds.
class GreedyBoundProvider : public BoundProvider {
 public:
  std::string name() const override { return "greedy"; }
  BoundEstimate Provide(InstrumentedOracle& f,
                        std::span<const ElementId> ground, int k,
                        std::span<const double> singletons) override;
};

// Gamma = max singleton value, alpha0 = 1/k (by subadditivity). Free.
class SingletonBoundProvider : public BoundProvider {
 public:
  std::string name() const override { return "singleton"; }
  BoundEstimate Provide(InstrumentedOracle& f,
                        std::span<const ElementId> ground, int k,
                        std::span<const double> singletons) override;
};

std::unique_ptr<BoundProvider> MakeBoundProvider(const std::string& name);

// ceil(p k / (1 - beta) + k), capped at n.
std::int64_t TopCount(int n, int p, int k, double beta);

struct TopSelection {
  std::vector<ElementId> elements;  // By decreasing value, ties by id.
  std::vector<double> values;       // f(x), aligned with 'elements'.
  std::vector<double> all_values;   // f(x) for every id 0..n-1.
};

// One round of n singleton queries.
TopSelection SelectTopElements(InstrumentedOracle& f, int p, int k,
                               double beta);

// The closed-form alpha0 of the linear-search bound with parameter eps_bar:
// (4 + 4 (2 - eps_bar) eps_bar / ((1 - eps_bar)(1 - 2 eps_bar)))^-1.
double LinearSeqAlpha(double eps_bar);

// beta * alpha0 if restricted, else alpha0.
double AlphaFor(double beta, bool restricted, double alpha0);

struct LstpgsConfig {
  int p = 1;
  int k = 1;
  double beta = 0.9;     // In (0, 1).
  double eps_bar = 0.1;  // In (0, 1/2); only used with the closed form.
  double eps = 0.1;      // In (0, 1 - 1/e).
};

void ValidateLstpgsConfig(const LstpgsConfig& config);

struct LstpgsTrace {
  std::int64_t top_count = 0;
  bool restricted = false;
  std::string provider;
  BoundEstimate bound;
  double alpha = 0.0;
  QueryLedger top_used;
  QueryLedger provider_used;
  PgsTrace pgs;  // pgs.used excludes the reused singleton round.
  QueryLedger used;
};

struct LstpgsResult {
  ElementSet solution;
  LstpgsTrace trace;
};

LstpgsResult LstPgs(InstrumentedOracle& f, const LstpgsConfig& config,
                    BoundProvider& provider, Rng& rng);

}  // namespace supersep

#endif  // SUPERSEP_LSTPGS_H_
