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

// Fisher information and optimal estimators for photon counting at an
// arbitrary bias phase.
//
// The quantum Fisher information of a pure sector state is 4 Var(J3),
// invariant under phase shifts. The classical Fisher information of the
// counting distribution p_m(phi) is evaluated with analytic derivatives;
// outcomes whose probability vanishes at the bias point contribute the
// continuous-extension term 4 |d amp / d phi|^2, which keeps F(phi)
// exact at fringe extrema where an outcome probability touches zero
// quadratically.
//
// The estimator table holds, per counting outcome, the value
//   g_m = Re[ -i <m1|J3|psi(phi)> / <m1|psi(phi)> ],
// the unique assignment (up to normalization) that saturates the
// Cramer-Rao bound when the ratios are real. A nonzero imaginary part is
// exactly the signature of broken path symmetry. With lambda = 2 Var(J3),
// the estimator A = g/lambda has unit slope and variance 1/(4 Var(J3)).

#ifndef PATHSYM_ESTIMATION_HPP
#define PATHSYM_ESTIMATION_HPP

#include <vector>

#include "pathsym/spinspace.hpp"

namespace pathsym {

/// 4 Var(J3); equals 4 <J3^2> for path-symmetric states (where <J3> = 0).
double qfi_sector(const PureSector& state);

/// Counting-outcome probabilities p_m(phi) = |<m1|exp(-i phi J3)|psi>|^2.
/// Index m runs over outcomes (n1, n2) = (N - i, i); sums to 1 to 1e-10.
VectorXd counting_probabilities(const PureSector& state, double phi);

/// Classical Fisher information of the counting distribution at bias phi.
double cfi_counting(const PureSector& state, double phi);

struct FisherResult {
  double qfi = 0.0;
  double cfi_at_phi = 0.0;
  double phi = 0.0;
  double gap() const { return qfi - cfi_at_phi; }  // never below -1e-8
};

FisherResult fisher(const PureSector& state, double phi);

struct EstimatorTable {
  double phi = 0.0;               // bias the table was built at
  VectorXd g;                     // g_m per outcome; 0 on excluded outcomes
  double lambda = 0.0;            // 2 Var(J3); A_m = g_m / lambda has unit slope
  double imag_residual = 0.0;     // max |Im(ratio)| over included outcomes
  std::vector<int> excluded;      // outcomes below the amplitude floor
  bool achievable = false;        // imag_residual <= tol
  bool zero_sensitivity = false;  // Var(J3) = 0: lambda unusable
  /// An excluded outcome had a non-negligible J3 amplitude: the bound is
  /// not attainable from this bias point (zero-probability outcome still
  /// carries signal).
  bool informative_outcome_excluded = false;
};

/// Builds the estimator for the state phase-shifted to bias phi.
EstimatorTable optimal_estimator(const PureSector& state, double phi,
                                 double tol = 1e-8);

struct RobustnessResult {
  double value = 0.0;  // 1 / sum of g_m^2 over included outcomes
  int included = 0;
};

/// Noise-amplification figure of the optimal estimator at bias phi.
/// Throws ZeroSensitivityError when the estimator is degenerate there
/// (Var(J3) = 0, or every informative outcome lies below the floor).
RobustnessResult robustness(const PureSector& state, double phi);

}  // namespace pathsym

#endif
