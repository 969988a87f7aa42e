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
// Batched value-oracle access and query metering.
//
// An adaptive round is one batch of mutually independent set evaluations;
// the two complexity measures reported everywhere in this library are the
// number of such batches (rounds) and the number of individual evaluations
// (queries). InstrumentedOracle is the only path algorithms have to a set
// function, so both counters are exact by construction.

#ifndef SUPERSEP_ORACLE_H_
#define SUPERSEP_ORACLE_H_

#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace supersep {

// Dense element index in [0, n). Ascending index is the global tie-break.
using ElementId = std::int32_t;
using ElementSet = std::vector<ElementId>;

// A set function over the ground set {0, ..., n-1}. Evaluate() receives a
// sorted, duplicate-free, in-range set and must be safe to call
// concurrently.
class SetFunction {
 public:
  virtual ~SetFunction() = default;
  virtual int ground_size() const = 0;
  virtual double Evaluate(std::span<const ElementId> sorted_set) const = 0;
};

class MalformedQueryError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

struct QueryLedger {
  std::int64_t rounds = 0;
  std::int64_t queries = 0;

  friend bool operator==(const QueryLedger&, const QueryLedger&) = default;
};

inline QueryLedger operator-(const QueryLedger& a, const QueryLedger& b) {
  return {a.rounds - b.rounds, a.queries - b.queries};
}

// Result of a marginal-gain batch. base_value is f(base), evaluated once and
// shared by all candidates.
struct MarginalBatch {
  double base_value = 0.0;
  std::vector<double> gains;
};

class InstrumentedOracle {
 public:
  explicit InstrumentedOracle(std::shared_ptr<const SetFunction> function);

  int ground_size() const { return function_->ground_size(); }

  // One round of sets.size() queries; an empty batch is free.
  std::vector<double> EvalBatch(const std::vector<ElementSet>& sets);

  // f(x | base) for every candidate. One round of candidates.size() + 1
  // queries (the +1 is f(base)), re-charged on every call. An empty
  // candidate list is free and returns no gains.
  MarginalBatch Marginals(std::span<const ElementId> base,
                          std::span<const ElementId> candidates);

  // View g(X) = f(base u X) that meters into this oracle's ledger.
  InstrumentedOracle Restrict(std::span<const ElementId> base) const;

  QueryLedger Snapshot() const { return *ledger_; }
  void ResetLedger() { *ledger_ = QueryLedger{}; }

  // The fixed base of a restricted view (empty for a root oracle).
  const ElementSet& restriction() const { return base_; }

 private:
  InstrumentedOracle(std::shared_ptr<const SetFunction> function,
                     std::shared_ptr<QueryLedger> ledger, ElementSet base);

  // Sorted, deduplicated union of the restriction base and 'set'. Throws
  // MalformedQueryError on out-of-range ids.
  ElementSet Normalize(std::span<const ElementId> set) const;

  void Charge(std::int64_t queries);

  std::shared_ptr<const SetFunction> function_;
  std::shared_ptr<QueryLedger> ledger_;
  ElementSet base_;
};

}  // namespace supersep

#endif  // SUPERSEP_ORACLE_H_
