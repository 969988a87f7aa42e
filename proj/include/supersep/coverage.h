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
// Weighted max-coverage functions and other concrete set functions.

#ifndef SUPERSEP_COVERAGE_H_
#define SUPERSEP_COVERAGE_H_

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "supersep/oracle.h"

namespace supersep {

// Ground element i chooses sets[i], a list of universe points. Covering a
// point earns its weight once. p is the largest number of sets that share
// a single point (the element frequency).
struct CoverageInstance {
  std::vector<double> universe_weights;
  std::vector<std::vector<int>> sets;
  int p = 0;

  int n() const { return static_cast<int>(sets.size()); }

  friend bool operator==(const CoverageInstance&,
                         const CoverageInstance&) = default;
};

// Largest number of sets containing any one universe point; 0 when no set
// contains anything.
int MaxFrequency(const CoverageInstance& instance);

// Total weight covered by the union of the chosen sets. Duplicate ids are
// harmless.
double CoverageValue(const CoverageInstance& instance,
                     std::span<const ElementId> chosen);

class CoverageFunction : public SetFunction {
 public:
  explicit CoverageFunction(CoverageInstance instance);

  int ground_size() const override { return instance_.n(); }
  double Evaluate(std::span<const ElementId> sorted_set) const override;

  const CoverageInstance& instance() const { return instance_; }

 private:
  CoverageInstance instance_;
};

// f(S) = sum of weights[x] for x in S.
class ModularFunction : public SetFunction {
 public:
  explicit ModularFunction(std::vector<double> weights)
      : weights_(std::move(weights)) {}

  int ground_size() const override { return static_cast<int>(weights_.size()); }
  double Evaluate(std::span<const ElementId> sorted_set) const override;

 private:
  std::vector<double> weights_;
};

class GenerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GeneratorConfig {
  int n = 10;
  int universe_size = 20;
  int p_target = 2;
  int set_size_min = 1;
  int set_size_max = 3;
  double weight_min = 1.0;
  double weight_max = 1.0;
  std::uint64_t seed = 0;
};

// Random coverage instance whose max frequency never exceeds p_target.
// Each set draws its points from the universe points that still have spare
// frequency; deterministic in the config. Throws GenerationError when the
// config is invalid or the frequency budget runs out.
CoverageInstance GenerateCoverage(const GeneratorConfig& config);

class InstanceFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Declared p disagrees with the recomputed max frequency.
class InstanceIntegrityError : public InstanceFormatError {
 public:
  using InstanceFormatError::InstanceFormatError;
};

// JSON: {"universe_weights": [...], "sets": [[...], ...], "p": int}.
CoverageInstance ParseInstance(const std::string& text);
std::string SerializeInstance(const CoverageInstance& instance);
CoverageInstance LoadInstance(const std::string& path);
void StoreInstance(const CoverageInstance& instance, const std::string& path);

// The four-set example used throughout the tests and docs: unit weights on
// u1..u4, a={u1,u2}, b={u2,u3}, c={u4}, d={u3}.
CoverageInstance CanonicalC1();

}  // namespace supersep

#endif  // SUPERSEP_COVERAGE_H_
