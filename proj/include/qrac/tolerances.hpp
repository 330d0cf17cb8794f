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

namespace qrac {

// Central tolerance table. Every numeric gate in the library reads from
// here; nothing defines a private epsilon.

/// Maximum allowed Hermiticity violation |a_jk - conj(a_kj)| on input.
inline constexpr double HERM_TOL = 1e-12;

/// Eigendecomposition reconstruction accuracy (entrywise).
inline constexpr double RECON_TOL = 1e-10;

/// Positive-semidefiniteness acceptance: min eigenvalue >= -PSD_TOL.
inline constexpr double PSD_TOL = 1e-9;

/// Jacobi sweep termination: off-diagonal Frobenius norm below this.
inline constexpr double JACOBI_OFF_TOL = 1e-13;

/// Jacobi sweep cap before declaring non-convergence.
inline constexpr int JACOBI_MAX_SWEEPS = 100;

}  // namespace qrac
