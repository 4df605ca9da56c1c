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

// Multi-sector sensitivity aggregation and the closed-form benchmark
// numbers for squeezed-coherent and pair-state interferometry.
//
// Photon counting resolves the total photon number, so Fisher information
// adds across sectors with their weights. The sensitivity ceiling for
// fluctuating photon number is <N^2> (not <N>^2): each N-sector is capped
// by N^2, attained by the NOON state. Truncation remainder mass is
// excluded from both sides of the ratio, keeping estimates monotone in
// the truncation level.

#ifndef PATHSYM_METROLOGY_HPP
#define PATHSYM_METROLOGY_HPP

#include <span>
#include <utility>
#include <vector>

#include "pathsym/config.hpp"
#include "pathsym/states.hpp"

namespace pathsym {

struct SectorSensitivity {
  int n_photons = 0;
  double weight = 0.0;
  double qfi = 0.0;  // 4 Var(J3) of the sector state
};

struct SensitivityReport {
  double total_qfi = 0.0;
  double heisenberg_limit = 0.0;  // <N^2> over kept sectors
  double ratio = 0.0;             // total_qfi / heisenberg_limit, in [0, 1]
  double mean_n = 0.0;
  double remainder = 0.0;
  std::vector<SectorSensitivity> per_sector;
  /// (phi, total CFI) samples when a phase grid was requested.
  std::vector<std::pair<double, double>> cfi_samples;
};

/// Aggregates per-sector Fisher information; with a phase grid, also
/// samples the weighted total CFI(phi). Throws TruncationError when the
/// state's untracked mass exceeds max_remainder (possible for states
/// loaded from files) and std::logic_error if the ratio exceeds 1
/// beyond rounding.
SensitivityReport sensitivity_report(const MultiSectorState& state,
                                     std::span<const double> phi_grid = {},
                                     double max_remainder = 1e-6);

/// Weighted counting CFI summed over sectors at one bias phase.
double cfi_total(const MultiSectorState& state, double phi);

struct SqueezedCoherentMoments {
  double qfi = 0.0;  // 4 <J3^2>, with <J3> = 0 for these inputs
  double n_squared = 0.0;
};

/// Closed forms for coherent alpha mixed with squeezed vacuum r:
///   4<J3^2> = alpha^2 exp(2 sign r) + sinh^2 r
///   <N^2>   = (alpha^2 + sinh^2 r)^2 + alpha^2 + 2 sinh^2 r cosh^2 r.
/// sign = +1 is the orientation that helps (for r > 0).
SqueezedCoherentMoments squeezed_coherent_moments(double alpha, double r,
                                                  int sign = +1);

struct QOptimum {
  double q_star = 0.0;      // intensity ratio 4 alpha^2 / exp(2r) at the optimum
  double ratio_star = 0.0;  // 4<J3^2>/<N^2> at the optimum
};

/// Maximizes the squeezed-coherent sensitivity ratio over the intensity
/// split q at fixed total mean photon number (alpha^2 + sinh^2 r held
/// constant). Deterministic: 64-point log grid on q in [0.05, 50], then
/// golden-section refinement to 1e-6 in q.
QOptimum optimize_q(double n_bar_total);

/// Sensitivity ratio of the pair state at squeezing r, from truncated
/// numerics; approaches 1/2 from above as r grows.
double pair_state_ratio(double r, const TruncationPolicy& policy = {});

/// Squeezing strength equivalent to a photon number state |n> in the
/// weak port: 10 log10(2n + 1) dB.
double equivalent_squeezing_db(int n);

}  // namespace pathsym

#endif
