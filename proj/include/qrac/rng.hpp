// Copyright 2026 The qrac Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

#include "qrac/errors.hpp"

namespace qrac {

/// SplitMix64 (Steele, Lea & Flood 2014). Output k for seed s is
/// mix(s + (k+1) * 0x9E3779B97F4A7C15), a pure function of (seed, k), so
/// streams are reproducible across platforms and languages. All sampling
/// in this library (simulation, optimizer restarts, test campaigns) goes
/// through this generator.
///
/// Derived draws consume a fixed number of raw outputs:
///   next_double      1 output, 53-bit mantissa, uniform in [0, 1)
///   next_below(k)    1 output, multiply-shift range reduction
///   next_gaussian    2 outputs, Box-Muller (cosine branch only)
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1).
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, k), by the multiply-shift reduction
  /// floor(u * k / 2^64).
  std::uint64_t next_below(std::uint64_t k) {
    if (k == 0) throw ValidationError("SplitMix64::next_below: k must be positive");
    return mul_high(next_u64(), k);
  }

  /// Standard normal deviate.
  double next_gaussian() {
    const double u1 = 1.0 - next_double();  // (0, 1], keeps log finite
    const double u2 = next_double();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

 private:
  // High 64 bits of the 128-bit product a*b, in portable arithmetic.
  static std::uint64_t mul_high(std::uint64_t a, std::uint64_t b) {
    const std::uint64_t a_lo = a & 0xFFFFFFFFull, a_hi = a >> 32;
    const std::uint64_t b_lo = b & 0xFFFFFFFFull, b_hi = b >> 32;
    const std::uint64_t c0 = a_lo * b_lo;
    const std::uint64_t c1 = a_hi * b_lo + (c0 >> 32);
    const std::uint64_t c2 = a_lo * b_hi + (c1 & 0xFFFFFFFFull);
    return a_hi * b_hi + (c1 >> 32) + (c2 >> 32);
  }

  std::uint64_t state_;
};

}  // namespace qrac
