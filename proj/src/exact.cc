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
#include "supersep/exact.h"

#include <algorithm>
#include <bit>
#include <cstdlib>

namespace supersep {

int BruteForceCap() {
  if (const char* env = std::getenv("SUPERSEP_BRUTE_CAP")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v <= 30) {
      return static_cast<int>(v);
    }
  }
  return kDefaultBruteCap;
}

ElementSet MaskToSet(std::uint32_t mask) {
  ElementSet out;
  for (int i = 0; mask != 0; ++i, mask >>= 1) {
    if (mask & 1u) out.push_back(i);
  }
  return out;
}

SubsetTable::SubsetTable(const SetFunction& f, int cap) : n_(f.ground_size()) {
  if (n_ > cap) {
    throw CapExceededError("ground set of size " + std::to_string(n_) +
                           " exceeds exhaustive cap " + std::to_string(cap));
  }
  const std::uint32_t total = 1u << n_;
  values_.resize(total);
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    ElementSet s = MaskToSet(mask);
    values_[mask] = f.Evaluate(s);
  }
}

namespace {

// Lexicographic order on sorted id lists, as bitmasks.
bool LexLess(std::uint32_t a, std::uint32_t b) {
  return MaskToSet(a) < MaskToSet(b);
}

OptResult OptOverMasks(const SubsetTable& table, std::uint32_t allowed, int k) {
  bool found = false;
  std::uint32_t best = 0;
  double best_value = 0.0;
  const std::uint32_t total = 1u << table.n();
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    if ((mask & ~allowed) != 0 || std::popcount(mask) != k) continue;
    const double v = table[mask];
    if (!found || v > best_value || (v == best_value && LexLess(mask, best))) {
      found = true;
      best = mask;
      best_value = v;
    }
  }
  return {MaskToSet(best), best_value};
}

}  // namespace

OptResult BruteForceOpt(const SetFunction& f, int k, int cap) {
  const int n = f.ground_size();
  if (k < 0 || k > n) throw std::invalid_argument("k must lie in [0, n]");
  SubsetTable table(f, cap);
  return OptOverMasks(table, (n == 32 ? ~0u : (1u << n) - 1), k);
}

OptResult BruteForceOptWithin(const SetFunction& f, const ElementSet& ground,
                              int k, int cap) {
  SubsetTable table(f, cap);
  std::uint32_t allowed = 0;
  for (ElementId x : ground) {
    if (x < 0 || x >= table.n()) throw MalformedQueryError("ground id");
    allowed |= 1u << x;
  }
  k = std::min<int>(k, std::popcount(allowed));
  if (k < 0) throw std::invalid_argument("k must be non-negative");
  return OptOverMasks(table, allowed, k);
}

PropertyReport CheckSubmodularMonotone(const SetFunction& f, int cap) {
  SubsetTable t(f, cap);
  const int n = t.n();
  const std::uint32_t total = 1u << n;
  auto fail = [](std::string what, std::uint32_t a, std::uint32_t b,
                 std::optional<ElementId> x, double slack) {
    return PropertyReport{
        false, Witness{std::move(what), MaskToSet(a), MaskToSet(b), x, slack}};
  };
  for (std::uint32_t a = 0; a < total; ++a) {
    if (t[a] < -kCheckTolerance) return fail("non-negative", a, a, {}, -t[a]);
    for (int x = 0; x < n; ++x) {
      if (a & (1u << x)) continue;
      const double gain = t[a | (1u << x)] - t[a];
      if (gain < -kCheckTolerance) return fail("monotone", a, a, x, -gain);
    }
  }
  for (std::uint32_t a = 0; a < total; ++a) {
    for (int y = 0; y < n; ++y) {
      if (a & (1u << y)) continue;
      const std::uint32_t b = a | (1u << y);
      for (int x = 0; x < n; ++x) {
        if (b & (1u << x)) continue;
        const double small = t[a | (1u << x)] - t[a];
        const double large = t[b | (1u << x)] - t[b];
        if (large - small > kCheckTolerance) {
          return fail("submodular", a, b, x, large - small);
        }
      }
    }
  }
  return {};
}

namespace {

// sum_x f(x) - sum_x f(x|A) for the whole ground set.
double Deficit(const SubsetTable& t, std::uint32_t a) {
  double d = 0.0;
  for (int x = 0; x < t.n(); ++x) {
    const std::uint32_t bit = 1u << x;
    const double gain = (a & bit) ? 0.0 : t[a | bit] - t[a];
    d += t.singleton(x) - gain;
  }
  return d;
}

}  // namespace

PropertyReport CheckPSuperseparable(const SetFunction& f, double p, int cap) {
  SubsetTable t(f, cap);
  const std::uint32_t total = 1u << t.n();
  // Report the worst A (first in mask order among ties): it is the most
  // useful witness and the one min-p reasoning points at.
  std::optional<std::uint32_t> worst;
  double worst_excess = kCheckTolerance;
  for (std::uint32_t a = 0; a < total; ++a) {
    const double excess = Deficit(t, a) - p * t[a];
    if (excess > worst_excess) {
      worst = a;
      worst_excess = excess;
    }
  }
  if (!worst) return {};
  return {false,
          Witness{"p-superseparable", MaskToSet(*worst), {}, {}, worst_excess}};
}

PropertyReport CheckSubsetSuperseparable(const SetFunction& f, double p,
                                         int cap) {
  SubsetTable t(f, cap);
  const int n = t.n();
  const std::uint32_t total = 1u << n;
  std::vector<double> loss(n);
  std::vector<double> partial(total);
  for (std::uint32_t a = 0; a < total; ++a) {
    for (int x = 0; x < n; ++x) {
      const std::uint32_t bit = 1u << x;
      const double gain = (a & bit) ? 0.0 : t[a | bit] - t[a];
      loss[x] = t.singleton(x) - gain;
    }
    // partial[v] = sum of loss over v, built from v minus its lowest bit.
    partial[0] = 0.0;
    for (std::uint32_t v = 1; v < total; ++v) {
      partial[v] = partial[v & (v - 1)] + loss[std::countr_zero(v)];
    }
    for (std::uint32_t v = 0; v < total; ++v) {
      const double excess = partial[v] - p * t[a];
      if (excess > kCheckTolerance) {
        return {false, Witness{"subset p-superseparable", MaskToSet(a),
                               MaskToSet(v), {}, excess}};
      }
    }
  }
  return {};
}

MinSupersepResult MinSupersepP(const SetFunction& f, int cap) {
  SubsetTable t(f, cap);
  const std::uint32_t total = 1u << t.n();
  double best = 0.0;
  for (std::uint32_t a = 0; a < total; ++a) {
    const double deficit = Deficit(t, a);
    if (t[a] > kCheckTolerance) {
      best = std::max(best, deficit / t[a]);
    } else if (deficit > kCheckTolerance) {
      return {std::nullopt,
              Witness{"p-superseparable for finite p", MaskToSet(a), {}, {},
                      deficit}};
    }
  }
  return {best, std::nullopt};
}

}  // namespace supersep
