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
// Threshold block sequencing: picks T from a candidate set G so that the
// average marginal gain of T is close to a threshold tau, while filtering
// mostly on small random blocks of the remaining candidates instead of on
// everything that remains.

#ifndef SUPERSEP_TBS_H_
#define SUPERSEP_TBS_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "supersep/oracle.h"
#include "supersep/rng.h"

namespace supersep {

struct TbsParams {
  double max_size = 1.0;  // M, an upper bound on |G|.
  int k_cap = 1;          // Cardinality constraint on T.
  double eps = 0.1;       // In (0, 1).
  double delta = 0.1;     // In (0, 1).
  double tau = 0.0;       // Marginal gain threshold, >= 0.
};

// Query-cost factor the reduction constant minimizes:
// h(c) = (2 + (20 ln(2/(1-c)) + 1) / (1 - 4c)) / c on (0, 1/4).
double ReductionCostFactor(double c);

// Minimizer of ReductionCostFactor over (0, 1/4); computed once and cached.
double DeriveCBar();

struct TbsConstants {
  double c_bar = 0.0;
  std::int64_t outer_budget = 0;  // ceil(4 (1 + 1/c) ln(M / delta))
  std::int64_t inner_budget = 0;  // ceil(4 (1 + 4/eps) ln(2 / (1 - c)))
  double block_fraction = 0.0;    // eps / (4 (1 - 4c))

  // ceil(block_fraction * remaining), at most 'remaining'.
  std::size_t BlockSize(std::size_t remaining) const;
  // outer_budget * (1 + 2 * inner_budget).
  std::int64_t RoundBound() const;
};

TbsConstants ComputeTbsConstants(const TbsParams& params);

// { floor((1+eps)^u) : u >= 0, 1 <= floor(...) <= max_len } u { max_len },
// ascending and deduplicated.
std::vector<int> PrefixIndices(int max_len, double eps);

// Prefix length to add given the good prefix lengths. If the largest good
// length (0 when there is none) is max_len, returns max_len; otherwise the
// smallest index exceeding every good length.
int SelectBestPrefix(std::span<const int> goods, std::span<const int> indices,
                     int max_len);

enum class TbsStatus { kCardinalityHit, kExhausted, kFailure };

const char* ToString(TbsStatus status);

struct TbsOutcome {
  ElementSet set;  // In insertion order.
  TbsStatus status = TbsStatus::kExhausted;
  QueryLedger used;

  // g(T | empty), reconstructed from values already queried.
  double gain = 0.0;
  // Whether gain >= (1-eps)/(1+eps) * tau * |T| held on return. Always
  // true for kFailure (no set is returned).
  bool value_bound_ok = true;

  std::int64_t outer_iterations = 0;
  std::int64_t inner_iterations = 0;
  std::int64_t empty_blocks = 0;  // Inner iterations whose block filtered to empty.
  std::int64_t filter_rounds = 0;
};

// Runs the procedure on candidates 'ground' with value oracle g (usually a
// restricted view). Rounds: one per full filtering, and per inner iteration
// one for the block filter plus one for the prefix batch (the latter is
// skipped when the block filters to empty). Throws std::invalid_argument
// when |ground| > max_size or a parameter is out of range; failure is a
// status, not an exception.
TbsOutcome ThresholdBlockSeq(InstrumentedOracle& g,
                             std::span<const ElementId> ground,
                             const TbsParams& params, Rng& rng);

namespace internal {

void ValidateTbsParams(std::size_t ground_size, const TbsParams& params);

// Shared by the block and full-sweep variants: given candidates that already
// passed the threshold filter against T (value t_value), permute, evaluate
// prefixes in one batch and append the chosen prefix to T. Returns the new
// value of T.
double AddBestPrefix(InstrumentedOracle& g, std::vector<ElementId> passed,
                     const TbsParams& params, double t_value, ElementSet& t,
                     std::vector<char>& in_t, Rng& rng);

bool ValueBoundHolds(double gain, std::size_t size, const TbsParams& params);

}  // namespace internal

}  // namespace supersep

#endif  // SUPERSEP_TBS_H_
