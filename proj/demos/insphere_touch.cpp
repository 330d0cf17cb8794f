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

// Shows the dual-pair structure of the Bloch body: along a pure-state
// direction the boundary sits at the outsphere, and in the opposite
// direction it touches the insphere.

#include <cstdio>

#include "qrac/qrac.hpp"

int main() {
  qrac::SplitMix64 rng(1);
  for (int dim : {2, 3, 4, 8}) {
    const qrac::GeometryConstants g = qrac::geometry_constants(dim);
    const qrac::BlochVector pure = qrac::random_pure_bloch(dim, rng);
    const qrac::BlochVector u = pure * (1.0 / pure.norm());
    std::printf("N=%d  r=%.9f  R=%.9f  radius(+u)=%.9f  radius(-u)=%.9f\n", dim, g.r, g.R,
                qrac::boundary_radius(u), qrac::boundary_radius(u * -1.0));
  }
  return 0;
}
