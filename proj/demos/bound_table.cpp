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

// Tabulates the success-probability bound for small (n, m) and, where a
// closed-form code exists, the value it actually achieves.

#include <cstdio>

#include "qrac/qrac.hpp"

int main() {
  std::printf("%4s %4s %16s %16s %10s\n", "n", "m", "bound", "closed-form p", "gap");
  for (int m = 1; m <= 2; ++m) {
    for (int n = 2; n <= 8; ++n) {
      const qrac::UpperBound b = qrac::upper_bound(n, m);
      try {
        const double p = qrac::avg_success(qrac::construct_known(n, m));
        std::printf("%4d %4d %16.12f %16.12f %10.2e%s\n", n, m, b.value, p, b.value - p,
                    b.vacuous ? "  (vacuous)" : "");
      } catch (const qrac::ValidationError&) {
        std::printf("%4d %4d %16.12f %16s %10s%s\n", n, m, b.value, "-", "-",
                    b.vacuous ? "  (vacuous)" : "");
      }
    }
  }
  return 0;
}
