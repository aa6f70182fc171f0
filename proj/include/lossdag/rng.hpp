// Copyright 2026 The lossdag Authors.
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

#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string_view>

namespace lossdag {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Mixes an arbitrary set of integer lanes into one seed. Used to derive
/// independent sub-seeds (per store key, per environment, per iteration)
/// from a single run seed.
inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b = 0,
                              std::uint64_t c = 0, std::uint64_t d = 0) {
  std::uint64_t h = splitmix64(a);
  h = splitmix64(h ^ (b + 0x9e3779b97f4a7c15ULL));
  h = splitmix64(h ^ (c + 0x632be59bd9b4e019ULL));
  h = splitmix64(h ^ (d + 0xd6e8feb86659fd93ULL));
  return h;
}

inline std::uint64_t hash_str(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

// Uniform helpers on top of mt19937_64. We roll our own instead of the
// <random> distributions so that sampled sequences are a property of the
// code, not of the standard library build.

inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform01(rng);
}

/// Uniform integer in [0, n). n must be positive.
inline std::size_t uniform_index(std::mt19937_64& rng, std::size_t n) {
  // Modulo bias is negligible for the population/arity sizes we draw from,
  // but rejection keeps the draw exact.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t v = rng();
  while (v >= limit) v = rng();
  return static_cast<std::size_t>(v % n);
}

inline double gaussian(std::mt19937_64& rng) {
  // Box-Muller; one value per call keeps replay order obvious.
  double u1 = uniform01(rng);
  double u2 = uniform01(rng);
  if (u1 < 1e-300) u1 = 1e-300;
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

/// Counter-based Gaussian stream. A draw is a pure function of
/// (run seed, stream id, step counter, lane), so repeated evaluations of the
/// same loss at the same step see identical noise and concurrent evaluations
/// never share state.
struct NoiseStream {
  std::uint64_t run_seed = 0;
  std::uint64_t stream = 0;
  std::uint64_t counter = 0;

  double normal(std::uint64_t lane) const {
    const std::uint64_t base = mix_seed(run_seed, stream, counter, lane);
    double u1 = static_cast<double>(splitmix64(base) >> 11) * 0x1.0p-53;
    double u2 = static_cast<double>(splitmix64(base + 1) >> 11) * 0x1.0p-53;
    if (u1 < 1e-300) u1 = 1e-300;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
  }
};

}  // namespace lossdag
