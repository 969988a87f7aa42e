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
// Top-element wrapper around a constant-factor subsolver: run the subsolver
// only on the ceil(p k / (1 - beta) + k) best singletons.

#ifndef SUPERSEP_LALST_H_
#define SUPERSEP_LALST_H_

#include <cstdint>
#include <memory>
#include <span>
#include <string>

#include "supersep/oracle.h"

namespace supersep {

class Subsolver {
 public:
  virtual ~Subsolver() = default;
  virtual std::string name() const = 0;
  // Approximation factor rho(eps) of Solve.
  virtual double Factor(double eps) const = 0;
  virtual ElementSet Solve(InstrumentedOracle& f,
                           std::span<const ElementId> ground, int k,
                           double eps) = 0;
};

class GreedySubsolver : public Subsolver {
 public:
  std::string name() const override { return "greedy"; }
  double Factor(double eps) const override;
  ElementSet Solve(InstrumentedOracle& f, std::span<const ElementId> ground,
                   int k, double eps) override;
};

// beta * (5 + 4 (2 - eps) eps / ((1 - eps)(1 - 2 eps)))^-1: the end-to-end
// factor with the low-adaptivity linear search as subsolver.
double LinearSearchFactor(double beta, double eps);

struct LalstResult {
  ElementSet solution;
  std::int64_t top_count = 0;
  double factor = 0.0;  // beta * rho(eps).
  QueryLedger top_used;
  QueryLedger subsolver_used;
  QueryLedger used;
};

LalstResult Lalst(InstrumentedOracle& f, int p, int k, double beta, double eps,
                  Subsolver& subsolver);

}  // namespace supersep

#endif  // SUPERSEP_LALST_H_
