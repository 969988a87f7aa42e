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
// Exhaustive ground truth for small ground sets: optimum by enumeration and
// checkers for submodularity, monotonicity and p-superseparability.
//
// These routines read the set function directly (they are verifiers, not
// algorithms) and tabulate f over all 2^n subsets up front, so every
// checker refuses ground sets above a cap. The default cap is 16 and the
// environment variable SUPERSEP_BRUTE_CAP overrides it.

#ifndef SUPERSEP_EXACT_H_
#define SUPERSEP_EXACT_H_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "supersep/oracle.h"

namespace supersep {

class CapExceededError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kDefaultBruteCap = 16;
inline constexpr int kDefaultPairCap = 10;
inline constexpr double kCheckTolerance = 1e-9;

// kDefaultBruteCap unless SUPERSEP_BRUTE_CAP holds a positive integer.
int BruteForceCap();

// First violation found by a checker. Which fields are meaningful depends
// on the check: submodularity fills a, b and x; superseparability fills a
// (and b = V' for the subset variant). slack is how far the inequality is
// violated (positive).
struct Witness {
  std::string property;
  ElementSet a;
  ElementSet b;
  std::optional<ElementId> x;
  double slack = 0.0;
};

struct PropertyReport {
  bool holds = true;
  std::optional<Witness> witness;
};

struct OptResult {
  ElementSet set;
  double value = 0.0;
};

// f tabulated over every subset, indexed by bitmask (bit i = element i).
class SubsetTable {
 public:
  SubsetTable(const SetFunction& f, int cap);

  int n() const { return n_; }
  double operator[](std::uint32_t mask) const { return values_[mask]; }
  double singleton(int x) const { return values_[1u << x]; }

 private:
  int n_;
  std::vector<double> values_;
};

ElementSet MaskToSet(std::uint32_t mask);

// Maximizing subset of size exactly k (or n when k > n is requested the
// call is rejected). Among equal values the lexicographically smallest
// sorted id list wins.
OptResult BruteForceOpt(const SetFunction& f, int k, int cap = BruteForceCap());

// Same, restricted to subsets of 'ground'.
OptResult BruteForceOptWithin(const SetFunction& f,
                              const ElementSet& ground, int k,
                              int cap = BruteForceCap());

// Non-negativity, monotonicity and diminishing returns, checked through the
// equivalent local form f(x|A) >= f(x|A+y) for all A, y, x not in A+y.
PropertyReport CheckSubmodularMonotone(const SetFunction& f,
                                       int cap = BruteForceCap());

// sum_x f(x|A) >= sum_x f(x) - p f(A) for every A. On failure the witness is
// the most violated A.
PropertyReport CheckPSuperseparable(const SetFunction& f, double p,
                                    int cap = BruteForceCap());

// The same inequality restricted to every subset V' of the ground set and
// every A. Double exponential, hence the smaller cap.
PropertyReport CheckSubsetSuperseparable(const SetFunction& f, double p,
                                         int cap = kDefaultPairCap);

struct MinSupersepResult {
  // Smallest p making f p-superseparable; empty when no finite p works
  // (positive deficit at some A with f(A) = 0), in which case 'witness'
  // names that A.
  std::optional<double> p;
  std::optional<Witness> witness;
};

MinSupersepResult MinSupersepP(const SetFunction& f, int cap = BruteForceCap());

}  // namespace supersep

#endif  // SUPERSEP_EXACT_H_
