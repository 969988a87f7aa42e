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
#include "supersep/oracle.h"

#include <algorithm>
#include <utility>

namespace supersep {

InstrumentedOracle::InstrumentedOracle(
    std::shared_ptr<const SetFunction> function)
    : InstrumentedOracle(std::move(function), std::make_shared<QueryLedger>(),
                         {}) {}

InstrumentedOracle::InstrumentedOracle(
    std::shared_ptr<const SetFunction> function,
    std::shared_ptr<QueryLedger> ledger, ElementSet base)
    : function_(std::move(function)),
      ledger_(std::move(ledger)),
      base_(std::move(base)) {
  if (!function_) throw std::invalid_argument("null set function");
}

ElementSet InstrumentedOracle::Normalize(
    std::span<const ElementId> set) const {
  const int n = function_->ground_size();
  ElementSet out;
  out.reserve(base_.size() + set.size());
  out.insert(out.end(), base_.begin(), base_.end());
  for (ElementId x : set) {
    if (x < 0 || x >= n) {
      throw MalformedQueryError("element " + std::to_string(x) +
                                " outside ground set of size " +
                                std::to_string(n));
    }
    out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void InstrumentedOracle::Charge(std::int64_t queries) {
  if (queries == 0) return;
  ledger_->rounds += 1;
  ledger_->queries += queries;
}

std::vector<double> InstrumentedOracle::EvalBatch(
    const std::vector<ElementSet>& sets) {
  // Validate the whole batch before charging so a malformed batch leaves
  // the ledger untouched.
  std::vector<ElementSet> normalized;
  normalized.reserve(sets.size());
  for (const ElementSet& s : sets) normalized.push_back(Normalize(s));
  std::vector<double> values;
  values.reserve(sets.size());
  for (const ElementSet& s : normalized) {
    values.push_back(function_->Evaluate(s));
  }
  Charge(static_cast<std::int64_t>(sets.size()));
  return values;
}

MarginalBatch InstrumentedOracle::Marginals(
    std::span<const ElementId> base, std::span<const ElementId> candidates) {
  MarginalBatch out;
  ElementSet full_base = Normalize(base);
  for (ElementId x : candidates) {
    if (x < 0 || x >= function_->ground_size()) {
      throw MalformedQueryError("candidate " + std::to_string(x) +
                                " outside ground set");
    }
  }
  if (candidates.empty()) return out;

  out.base_value = function_->Evaluate(full_base);
  out.gains.reserve(candidates.size());
  ElementSet scratch;
  for (ElementId x : candidates) {
    if (std::binary_search(full_base.begin(), full_base.end(), x)) {
      out.gains.push_back(0.0);
      continue;
    }
    scratch = full_base;
    scratch.insert(std::upper_bound(scratch.begin(), scratch.end(), x), x);
    out.gains.push_back(function_->Evaluate(scratch) - out.base_value);
  }
  Charge(static_cast<std::int64_t>(candidates.size()) + 1);
  return out;
}

InstrumentedOracle InstrumentedOracle::Restrict(
    std::span<const ElementId> base) const {
  return InstrumentedOracle(function_, ledger_, Normalize(base));
}

}  // namespace supersep
