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
#ifndef SUPERSEP_RNG_H_
#define SUPERSEP_RNG_H_

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <utility>
#include <vector>

namespace supersep {

// Seeded generator with platform-independent draws. The standard
// distributions are implementation-defined, so bounded integers and the
// shuffles below are built directly on the raw 64-bit engine output.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(Mix(seed)) {}

  std::uint64_t Next() { return engine_(); }

  // Uniform integer in [0, bound). bound must be positive.
  std::uint64_t UniformInt(std::uint64_t bound);

  // Uniform double in [0, 1).
  double Uniform01() { return static_cast<double>(Next() >> 11) * 0x1.0p-53; }

  // Independent child stream; consumes one draw from this stream.
  Rng Split() { return Rng(Next()); }

  template <typename T>
  void Shuffle(std::span<T> values) {
    for (std::size_t i = values.size(); i > 1; --i) {
      std::swap(values[i - 1], values[UniformInt(i)]);
    }
  }

  // Ordered uniform sample of 'count' distinct entries of 'pool'
  // (partial Fisher-Yates). If count >= pool.size() the whole pool is
  // returned in random order.
  template <typename T>
  std::vector<T> SampleWithoutReplacement(std::span<const T> pool,
                                          std::size_t count) {
    std::vector<T> scratch(pool.begin(), pool.end());
    if (count > scratch.size()) count = scratch.size();
    for (std::size_t i = 0; i < count; ++i) {
      std::size_t j = i + UniformInt(scratch.size() - i);
      std::swap(scratch[i], scratch[j]);
    }
    scratch.resize(count);
    return scratch;
  }

  // SplitMix64 finalizer; decorrelates nearby seeds.
  static std::uint64_t Mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

 private:
  std::mt19937_64 engine_;
};

inline std::uint64_t Rng::UniformInt(std::uint64_t bound) {
  // Rejection on the top of the range keeps the draw exactly uniform.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do {
    x = Next();
  } while (x >= limit);
  return x % bound;
}

}  // namespace supersep

#endif  // SUPERSEP_RNG_H_
