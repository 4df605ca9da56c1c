// Copyright 2026 The pathsym Authors
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

// Path symmetry: invariance of a sector state under the (unphysical)
// exchange of the two arms, which flips J3 while fixing J1 and J2.
//
// In the J3 basis the condition pairs opposite components,
//   amps[m] = conj(amps[-m]) * phase,
// and in the counting basis it says the phase-aligned amplitudes
// (see counting_phase_alignment) all share one phase chi0 modulo pi.
// Both checks extract chi0 deterministically from the largest amplitude
// and certify with the maximum deviation, no optimizer involved.

#ifndef PATHSYM_SYMMETRY_HPP
#define PATHSYM_SYMMETRY_HPP

#include "pathsym/spinspace.hpp"

namespace pathsym {

struct SymmetryReport {
  bool symmetric = false;
  double chi0 = 0.0;       // common phase mod pi, in [0, pi); valid if symmetric
  double residual = 0.0;   // max deviation from the defining condition
  Basis basis_used = Basis::CountingJ1;
  /// True when only one amplitude survived the floor, so any chi0 fits.
  bool chi0_ambiguous = false;
};

/// Counting-basis check: aligned amplitudes with magnitude above
/// 1e-12 (relative to the largest) must share one phase mod pi.
/// residual = max |Im(aligned_amp * exp(-i chi0))|.
/// Throws DegenerateStateError if no amplitude survives the floor.
SymmetryReport check_symmetry_counting(const PureSector& state, double tol = 1e-8);

/// J3-basis check of the pairing amps[i] = conj(amps[d-1-i]) * phase.
/// Verdicts agree with the counting-basis check.
SymmetryReport check_symmetry_internal(const PureSector& state, double tol = 1e-8);

/// The arm-exchange map (J3 -> -J3, J1 and J2 fixed): reverses and
/// conjugates the J3-basis amplitudes. Involutive; a state is
/// path-symmetric exactly when this returns it up to a global phase.
/// The result is expressed in the input's basis.
PureSector path_exchange(const PureSector& state);

}  // namespace pathsym

#endif
