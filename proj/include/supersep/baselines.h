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
// Reference algorithms: the classical greedy and a full-sweep threshold
// sequencing procedure used as a query-complexity comparator for
// ThresholdBlockSeq.

#ifndef SUPERSEP_BASELINES_H_
#define SUPERSEP_BASELINES_H_

#include <span>

#include "supersep/oracle.h"
#include "supersep/rng.h"
#include "supersep/tbs.h"

namespace supersep {

struct GreedyResult {
  ElementSet set;
  // f(set). For k == 0 nothing is queried and this is 0.
  double value = 0.0;
};

// k rounds; round i queries the gains of every element not yet chosen
// (|ground| - i + 1 candidates plus the shared f(S)). Ties go to the
// smaller id. k is clamped to |ground|.
GreedyResult Greedy(InstrumentedOracle& f, std::span<const ElementId> ground,
                    int k);

// Full-sweep threshold sequencing: every iteration filters all remaining
// candidates against T, permutes the survivors and appends a prefix chosen
// with the same good-prefix rule as ThresholdBlockSeq. The iteration budget
// reuses ThresholdBlockSeq's outer budget. Reconstructed from a prose
// description for comparison purposes; output contract matches
// ThresholdBlockSeq.
TbsOutcome ThresholdSeq(InstrumentedOracle& g,
                        std::span<const ElementId> ground,
                        const TbsParams& params, Rng& rng);

}  // namespace supersep

#endif  // SUPERSEP_BASELINES_H_
