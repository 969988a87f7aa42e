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
#include "supersep/lalst.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "supersep/baselines.h"
#include "supersep/lstpgs.h"

namespace supersep {

double GreedySubsolver::Factor(double) const { return 1.0 - std::exp(-1.0); }

ElementSet GreedySubsolver::Solve(InstrumentedOracle& f,
                                  std::span<const ElementId> ground, int k,
                                  double) {
  return Greedy(f, ground, k).set;
}

double LinearSearchFactor(double beta, double eps) {
  return beta /
         (5.0 + 4.0 * (2.0 - eps) * eps / ((1.0 - eps) * (1.0 - 2.0 * eps)));
}

LalstResult Lalst(InstrumentedOracle& f, int p, int k, double beta, double eps,
                  Subsolver& subsolver) {
  if (p < 1) throw std::invalid_argument("p must be >= 1");
  if (k < 0) throw std::invalid_argument("k must be >= 0");
  if (!(eps > 0.0 && eps < 0.5)) {
    throw std::invalid_argument("eps must lie in (0, 1/2)");
  }
  const QueryLedger start = f.Snapshot();
  k = std::min(k, f.ground_size());

  LalstResult out;
  TopSelection top = SelectTopElements(f, p, k, beta);  // Validates beta.
  out.top_used = f.Snapshot() - start;
  out.top_count = static_cast<std::int64_t>(top.elements.size());
  out.factor = beta * subsolver.Factor(eps);

  const QueryLedger before = f.Snapshot();
  out.solution = subsolver.Solve(f, top.elements, k, eps);
  out.subsolver_used = f.Snapshot() - before;
  out.used = f.Snapshot() - start;
  return out;
}

}  // namespace supersep
