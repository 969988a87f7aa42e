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
#include "supersep/baselines.h"

#include <algorithm>

namespace supersep {

GreedyResult Greedy(InstrumentedOracle& f, std::span<const ElementId> ground,
                    int k) {
  GreedyResult out;
  std::vector<ElementId> remaining(ground.begin(), ground.end());
  std::sort(remaining.begin(), remaining.end());
  remaining.erase(std::unique(remaining.begin(), remaining.end()),
                  remaining.end());
  k = std::clamp<int>(k, 0, static_cast<int>(remaining.size()));
  for (int step = 0; step < k; ++step) {
    MarginalBatch batch = f.Marginals(out.set, remaining);
    std::size_t best = 0;
    for (std::size_t i = 1; i < remaining.size(); ++i) {
      // Strict comparison keeps the smallest id among ties.
      if (batch.gains[i] > batch.gains[best]) best = i;
    }
    out.value = batch.base_value + batch.gains[best];
    out.set.push_back(remaining[best]);
    remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(best));
  }
  return out;
}

TbsOutcome ThresholdSeq(InstrumentedOracle& g,
                        std::span<const ElementId> ground,
                        const TbsParams& params, Rng& rng) {
  internal::ValidateTbsParams(ground.size(), params);
  const TbsConstants consts = ComputeTbsConstants(params);
  const QueryLedger start = g.Snapshot();

  TbsOutcome out;
  std::vector<char> in_t(g.ground_size(), 0);
  std::vector<ElementId> remaining(ground.begin(), ground.end());
  double empty_value = 0.0;
  double t_value = 0.0;
  bool have_empty_value = false;

  auto finish = [&](TbsStatus status) {
    out.status = status;
    out.used = g.Snapshot() - start;
    out.gain = have_empty_value ? t_value - empty_value : 0.0;
    out.value_bound_ok =
        status == TbsStatus::kFailure ||
        internal::ValueBoundHolds(out.gain, out.set.size(), params);
    return out;
  };

  for (std::int64_t iter = 0; iter < consts.outer_budget; ++iter) {
    ++out.outer_iterations;
    if (!remaining.empty()) {
      MarginalBatch batch = g.Marginals(out.set, remaining);
      ++out.filter_rounds;
      t_value = batch.base_value;
      if (!have_empty_value) {
        empty_value = batch.base_value;
        have_empty_value = true;
      }
      std::vector<ElementId> kept;
      for (std::size_t i = 0; i < remaining.size(); ++i) {
        if (!in_t[remaining[i]] && batch.gains[i] >= params.tau) {
          kept.push_back(remaining[i]);
        }
      }
      remaining = std::move(kept);
    }
    if (remaining.empty()) return finish(TbsStatus::kExhausted);

    t_value = internal::AddBestPrefix(g, remaining, params, t_value, out.set,
                                      in_t, rng);
    if (static_cast<int>(out.set.size()) == params.k_cap) {
      return finish(TbsStatus::kCardinalityHit);
    }
  }
  out.set.clear();
  return finish(TbsStatus::kFailure);
}

}  // namespace supersep
