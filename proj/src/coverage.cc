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
#include "supersep/coverage.h"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include "json.hpp"
#include "supersep/rng.h"

namespace supersep {

int MaxFrequency(const CoverageInstance& instance) {
  std::vector<int> freq(instance.universe_weights.size(), 0);
  int best = 0;
  for (const auto& set : instance.sets) {
    for (int u : set) {
      if (u >= 0 && static_cast<std::size_t>(u) < freq.size()) {
        best = std::max(best, ++freq[u]);
      }
    }
  }
  return best;
}

double CoverageValue(const CoverageInstance& instance,
                     std::span<const ElementId> chosen) {
  // Small marker buffer reused per thread; evaluation is on the hot path.
  thread_local std::vector<std::uint32_t> stamp;
  thread_local std::uint32_t epoch = 0;
  if (stamp.size() < instance.universe_weights.size()) {
    stamp.assign(instance.universe_weights.size(), 0);
    epoch = 0;
  }
  if (++epoch == 0) {
    std::fill(stamp.begin(), stamp.end(), 0);
    epoch = 1;
  }
  double total = 0.0;
  for (ElementId x : chosen) {
    for (int u : instance.sets[x]) {
      if (stamp[u] != epoch) {
        stamp[u] = epoch;
        total += instance.universe_weights[u];
      }
    }
  }
  return total;
}

CoverageFunction::CoverageFunction(CoverageInstance instance)
    : instance_(std::move(instance)) {
  for (const auto& set : instance_.sets) {
    for (int u : set) {
      if (u < 0 || static_cast<std::size_t>(u) >=
                       instance_.universe_weights.size()) {
        throw std::invalid_argument("coverage set references point " +
                                    std::to_string(u) + " outside universe");
      }
    }
  }
}

double CoverageFunction::Evaluate(std::span<const ElementId> sorted_set) const {
  return CoverageValue(instance_, sorted_set);
}

double ModularFunction::Evaluate(std::span<const ElementId> sorted_set) const {
  double total = 0.0;
  for (ElementId x : sorted_set) total += weights_[x];
  return total;
}

CoverageInstance GenerateCoverage(const GeneratorConfig& c) {
  if (c.n < 1) throw GenerationError("n must be >= 1");
  if (c.universe_size < 1) throw GenerationError("universe_size must be >= 1");
  if (c.p_target < 1) throw GenerationError("p_target must be >= 1");
  if (c.set_size_min < 0 || c.set_size_max < c.set_size_min) {
    throw GenerationError("set size range is empty");
  }
  if (c.weight_min < 0 || c.weight_max < c.weight_min) {
    throw GenerationError("weight range must be non-negative and ordered");
  }
  if (static_cast<std::int64_t>(c.n) * c.set_size_min >
      static_cast<std::int64_t>(c.universe_size) * c.p_target) {
    throw GenerationError(
        "frequency bound infeasible: n * set_size_min exceeds "
        "universe_size * p_target");
  }

  Rng rng(c.seed);
  CoverageInstance out;
  out.universe_weights.resize(c.universe_size);
  for (double& w : out.universe_weights) {
    w = c.weight_min + (c.weight_max - c.weight_min) * rng.Uniform01();
  }

  std::vector<int> freq(c.universe_size, 0);
  std::vector<int> open(c.universe_size);
  std::iota(open.begin(), open.end(), 0);
  out.sets.resize(c.n);
  for (int i = 0; i < c.n; ++i) {
    if (static_cast<int>(open.size()) < c.set_size_min) {
      throw GenerationError("frequency bound p_target=" +
                            std::to_string(c.p_target) +
                            " exhausted at set " + std::to_string(i));
    }
    const int hi = std::min<int>(c.set_size_max, open.size());
    const int size =
        c.set_size_min + static_cast<int>(rng.UniformInt(hi - c.set_size_min + 1));
    std::vector<int> points =
        rng.SampleWithoutReplacement<int>(open, static_cast<std::size_t>(size));
    std::sort(points.begin(), points.end());
    for (int u : points) ++freq[u];
    std::erase_if(open, [&](int u) { return freq[u] >= c.p_target; });
    out.sets[i] = std::move(points);
  }
  out.p = MaxFrequency(out);
  return out;
}

namespace {

using nlohmann::json;

CoverageInstance FromJson(const json& doc) {
  if (!doc.is_object()) throw InstanceFormatError("instance must be an object");
  for (const char* key : {"universe_weights", "sets", "p"}) {
    if (!doc.contains(key)) {
      throw InstanceFormatError(std::string("missing field '") + key + "'");
    }
  }
  CoverageInstance out;
  const json& weights = doc.at("universe_weights");
  if (!weights.is_array()) {
    throw InstanceFormatError("universe_weights must be an array");
  }
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (!weights[i].is_number()) {
      throw InstanceFormatError("universe_weights[" + std::to_string(i) +
                                "] is not a number");
    }
    double w = weights[i].get<double>();
    if (!(w >= 0.0)) {
      throw InstanceFormatError("universe_weights[" + std::to_string(i) +
                                "] is negative");
    }
    out.universe_weights.push_back(w);
  }
  const json& sets = doc.at("sets");
  if (!sets.is_array()) throw InstanceFormatError("sets must be an array");
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (!sets[i].is_array()) {
      throw InstanceFormatError("sets[" + std::to_string(i) +
                                "] is not an array");
    }
    std::vector<int> set;
    for (const json& u : sets[i]) {
      if (!u.is_number_integer()) {
        throw InstanceFormatError("sets[" + std::to_string(i) +
                                  "] holds a non-integer point");
      }
      int point = u.get<int>();
      if (point < 0 ||
          static_cast<std::size_t>(point) >= out.universe_weights.size()) {
        throw InstanceFormatError("sets[" + std::to_string(i) +
                                  "] references point " +
                                  std::to_string(point) + " outside universe");
      }
      set.push_back(point);
    }
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    out.sets.push_back(std::move(set));
  }
  if (!doc.at("p").is_number_integer()) {
    throw InstanceFormatError("p must be an integer");
  }
  out.p = doc.at("p").get<int>();
  const int actual = MaxFrequency(out);
  if (out.p != actual) {
    throw InstanceIntegrityError("declared p=" + std::to_string(out.p) +
                                 " but max frequency is " +
                                 std::to_string(actual));
  }
  return out;
}

}  // namespace

CoverageInstance ParseInstance(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    // nlohmann reports "at line L, column C" in what().
    throw InstanceFormatError(e.what());
  }
  return FromJson(doc);
}

std::string SerializeInstance(const CoverageInstance& instance) {
  json doc;
  doc["universe_weights"] = instance.universe_weights;
  doc["sets"] = instance.sets;
  doc["p"] = instance.p;
  return doc.dump() + "\n";
}

CoverageInstance LoadInstance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InstanceFormatError("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseInstance(buffer.str());
}

void StoreInstance(const CoverageInstance& instance, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << SerializeInstance(instance);
  if (!out) throw std::runtime_error("write failed for " + path);
}

CoverageInstance CanonicalC1() {
  CoverageInstance c1;
  c1.universe_weights = {1.0, 1.0, 1.0, 1.0};
  c1.sets = {{0, 1}, {1, 2}, {3}, {2}};
  c1.p = 2;
  return c1;
}

}  // namespace supersep
