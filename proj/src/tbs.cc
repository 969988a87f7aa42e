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
#include "supersep/tbs.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <boost/math/tools/minima.hpp>

namespace supersep {

double ReductionCostFactor(double c) {
  return (2.0 + (20.0 * std::log(2.0 / (1.0 - c)) + 1.0) / (1.0 - 4.0 * c)) /
         c;
}

double DeriveCBar() {
  static const double c_bar = [] {
    auto result = boost::math::tools::brent_find_minima(
        ReductionCostFactor, 1e-6, 0.25 - 1e-6, 52);
    return result.first;
  }();
  return c_bar;
}

std::size_t TbsConstants::BlockSize(std::size_t remaining) const {
  const double raw = std::ceil(block_fraction * static_cast<double>(remaining));
  return std::min(remaining, static_cast<std::size_t>(std::max(raw, 1.0)));
}

std::int64_t TbsConstants::RoundBound() const {
  return outer_budget * (1 + 2 * inner_budget);
}

TbsConstants ComputeTbsConstants(const TbsParams& params) {
  TbsConstants c;
  c.c_bar = DeriveCBar();
  const double outer = std::ceil(4.0 * (1.0 + 1.0 / c.c_bar) *
                                 std::log(params.max_size / params.delta));
  const double inner = std::ceil(4.0 * (1.0 + 4.0 / params.eps) *
                                 std::log(2.0 / (1.0 - c.c_bar)));
  c.outer_budget = std::max<std::int64_t>(1, static_cast<std::int64_t>(outer));
  c.inner_budget = std::max<std::int64_t>(1, static_cast<std::int64_t>(inner));
  c.block_fraction = params.eps / (4.0 * (1.0 - 4.0 * c.c_bar));
  return c;
}

std::vector<int> PrefixIndices(int max_len, double eps) {
  std::vector<int> out;
  if (max_len < 1) return out;
  double power = 1.0;
  while (power <= static_cast<double>(max_len)) {
    const int v = static_cast<int>(std::floor(power));
    if (v >= 1 && (out.empty() || out.back() != v)) out.push_back(v);
    power *= 1.0 + eps;
  }
  if (out.empty() || out.back() != max_len) out.push_back(max_len);
  return out;
}

int SelectBestPrefix(std::span<const int> goods, std::span<const int> indices,
                     int max_len) {
  int max_good = 0;
  for (int g : goods) max_good = std::max(max_good, g);
  if (max_good >= max_len) return max_len;
  for (int idx : indices) {
    if (idx > max_good) return idx;
  }
  // indices always contains max_len, so this is unreachable for valid input.
  return max_len;
}

const char* ToString(TbsStatus status) {
  switch (status) {
    case TbsStatus::kCardinalityHit:
      return "cardinality";
    case TbsStatus::kExhausted:
      return "exhausted";
    case TbsStatus::kFailure:
      return "failure";
  }
  return "unknown";
}

namespace internal {

void ValidateTbsParams(std::size_t ground_size, const TbsParams& p) {
  if (static_cast<double>(ground_size) > p.max_size) {
    throw std::invalid_argument("|G| = " + std::to_string(ground_size) +
                                " exceeds M = " + std::to_string(p.max_size));
  }
  if (p.k_cap < 1) throw std::invalid_argument("k_cap must be >= 1");
  if (!(p.eps > 0.0 && p.eps < 1.0)) {
    throw std::invalid_argument("eps must lie in (0, 1)");
  }
  if (!(p.delta > 0.0 && p.delta < 1.0)) {
    throw std::invalid_argument("delta must lie in (0, 1)");
  }
  if (!(p.tau >= 0.0)) throw std::invalid_argument("tau must be >= 0");
}

bool ValueBoundHolds(double gain, std::size_t size, const TbsParams& p) {
  const double bound =
      (1.0 - p.eps) / (1.0 + p.eps) * p.tau * static_cast<double>(size);
  return gain >= bound - 1e-9 * std::max(1.0, std::abs(bound));
}

double AddBestPrefix(InstrumentedOracle& g, std::vector<ElementId> passed,
                     const TbsParams& params, double t_value, ElementSet& t,
                     std::vector<char>& in_t, Rng& rng) {
  rng.Shuffle(std::span<ElementId>(passed));
  const int max_len = std::min<int>(params.k_cap - static_cast<int>(t.size()),
                                    static_cast<int>(passed.size()));
  const std::vector<int> indices = PrefixIndices(max_len, params.eps);

  std::vector<ElementSet> prefixes;
  prefixes.reserve(indices.size());
  for (int len : indices) {
    ElementSet s = t;
    s.insert(s.end(), passed.begin(), passed.begin() + len);
    prefixes.push_back(std::move(s));
  }
  const std::vector<double> values = g.EvalBatch(prefixes);

  std::vector<int> goods;
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (values[i] - t_value >= (1.0 - params.eps) * params.tau * indices[i]) {
      goods.push_back(indices[i]);
    }
  }
  const int chosen = SelectBestPrefix(goods, indices, max_len);
  const std::size_t pos =
      std::lower_bound(indices.begin(), indices.end(), chosen) -
      indices.begin();
  for (int i = 0; i < chosen; ++i) {
    t.push_back(passed[i]);
    in_t[passed[i]] = 1;
  }
  return values[pos];
}

}  // namespace internal

TbsOutcome ThresholdBlockSeq(InstrumentedOracle& g,
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

  // Keeps candidates with gain >= tau that are not already in T.
  auto filter = [&](std::span<const ElementId> candidates,
                    const MarginalBatch& batch) {
    std::vector<ElementId> kept;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (!in_t[candidates[i]] && batch.gains[i] >= params.tau) {
        kept.push_back(candidates[i]);
      }
    }
    return kept;
  };

  for (std::int64_t outer = 0; outer < consts.outer_budget; ++outer) {
    ++out.outer_iterations;
    if (!remaining.empty()) {
      MarginalBatch batch = g.Marginals(out.set, remaining);
      ++out.filter_rounds;
      t_value = batch.base_value;
      if (!have_empty_value) {
        empty_value = batch.base_value;
        have_empty_value = true;
      }
      remaining = filter(remaining, batch);
    }
    if (remaining.empty()) return finish(TbsStatus::kExhausted);

    const std::size_t block_size = consts.BlockSize(remaining.size());
    for (std::int64_t inner = 0; inner < consts.inner_budget; ++inner) {
      ++out.inner_iterations;
      std::vector<ElementId> block = rng.SampleWithoutReplacement<ElementId>(
          remaining, block_size);
      MarginalBatch batch = g.Marginals(out.set, block);
      t_value = batch.base_value;
      std::vector<ElementId> passed = filter(block, batch);
      if (passed.empty()) {
        ++out.empty_blocks;
        continue;
      }
      t_value = internal::AddBestPrefix(g, std::move(passed), params, t_value,
                                        out.set, in_t, rng);
      if (static_cast<int>(out.set.size()) == params.k_cap) {
        return finish(TbsStatus::kCardinalityHit);
      }
    }
  }
  out.set.clear();
  return finish(TbsStatus::kFailure);
}

}  // namespace supersep
