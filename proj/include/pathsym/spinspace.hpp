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

// Fixed-photon-number two-mode sector algebra.
//
// A sector with N photons split over two interferometer arms is a spin
// j = N/2 space of dimension N+1. Index convention used everywhere:
//
//   index i  <->  m = j - i           (m descending, index 0 is m = +j)
//   counting outcome (n1, n2) = (j + m, j - m) = (N - i, i)
//
// Two bases are tracked per state:
//   InternalJ3  - eigenbasis of the arm population difference J3;
//                 phase shifts are diagonal here.
//   CountingJ1  - eigenbasis of J1, i.e. the photon-counting outcomes
//                 at the interferometer output.
//
// The basis change is the real orthogonal rotation
//   R = exp((pi/2) K),  K = -i J2  (real antisymmetric),
// with column i of R giving counting state |m1 = j - i> in the J3 basis.
// In this convention R^T J1 R = diag(j..-j) and R^T J3 R is minus the real
// tridiagonal J1 structure. The diagonal phases of counting_phase_alignment()
// give the alternative counting-basis gauge in which J3's matrix is purely
// imaginary and the arm-exchange map acts as plain complex conjugation.

#ifndef PATHSYM_SPINSPACE_HPP
#define PATHSYM_SPINSPACE_HPP

#include <Eigen/Dense>
#include <utility>

#include "pathsym/errors.hpp"

namespace pathsym {

using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using Eigen::VectorXcd;
using Eigen::VectorXd;

enum class Basis { InternalJ3, CountingJ1 };

struct SpinSector {
  int n_photons = 0;  // N >= 0

  int dim() const { return n_photons + 1; }
  double j() const { return 0.5 * n_photons; }
  /// m value at amplitude index i (exact: half-integers are representable).
  double m_at(int i) const { return 0.5 * (n_photons - 2 * i); }

  bool operator==(const SpinSector&) const = default;
};

/// Dense Hermitian operator on one sector. Hermiticity is validated to
/// 1e-12 at construction.
struct HermitianOp {
  HermitianOp(SpinSector sector, MatrixXcd matrix);

  SpinSector sector;
  MatrixXcd matrix;
};

/// Normalized amplitude vector over one sector, tagged with its basis.
class PureSector {
 public:
  /// Validates |amps| = 1 to 1e-12 unless require_normalized is false
  /// (used for intermediate unnormalized vectors).
  PureSector(SpinSector sector, Basis basis, VectorXcd amps,
             bool require_normalized = true);

  const SpinSector& sector() const { return sector_; }
  Basis basis() const { return basis_; }
  const VectorXcd& amps() const { return amps_; }
  double norm() const { return amps_.norm(); }

 private:
  SpinSector sector_;
  Basis basis_;
  VectorXcd amps_;
};

struct JOperators {
  HermitianOp j1, j2, j3;
};

/// Spin operators of the sector in the J3 basis: J3 diagonal (j..-j),
/// J1 real symmetric tridiagonal, J2 imaginary tridiagonal.
/// N = 0 yields 1x1 zero matrices.
JOperators build_j_operators(SpinSector sector);

/// The real orthogonal counting rotation R = exp((pi/2)(-i J2)).
/// Results are cached per sector size.
const MatrixXd& counting_basis_rotation(SpinSector sector);

/// Diagonal phases w_i = (-i)^i. In the gauge |m1,i>' = conj(w_i)|m1,i>,
/// the matrix of J3 between counting states is purely imaginary and path
/// exchange is plain complex conjugation of amplitudes.
VectorXcd counting_phase_alignment(SpinSector sector);

/// Converts a state between the two bases (identity if already there).
/// Round trips are exact to rounding; the norm is preserved.
PureSector to_basis(const PureSector& state, Basis target);

/// exp(-i phi J3): multiplies the m component by exp(-i phi m). States in
/// the counting basis are converted, shifted, and converted back.
PureSector apply_phase_shift(const PureSector& state, double phi);

/// Real expectation value <psi|Op|psi>. The state is converted to the J3
/// basis if needed (operators are represented there). Throws
/// DimensionError on sector mismatch. The imaginary residual must be
/// below 1e-10; larger values indicate a non-Hermitian operator.
double expectation(const PureSector& state, const HermitianOp& op);

/// d<A>/dphi at the state's current bias: -i<[A, J3]> = 2 Im <psi|A J3|psi>.
double estimator_slope(const PureSector& state, const HermitianOp& a);

/// Returns (dJ3 * dA, slope/2). The first never falls below the second
/// by more than 1e-10; a larger violation throws std::logic_error.
std::pair<double, double> uncertainty_product_check(const PureSector& state,
                                                    const HermitianOp& a);

struct J3Moments {
  double mean = 0.0;
  double second = 0.0;
  double variance() const { return second - mean * mean; }
};

/// <J3> and <J3^2> in either basis without forming dense operators
/// (diagonal in the J3 basis, tridiagonal in the counting basis).
J3Moments j3_moments(const PureSector& state);

/// Action of J3 on counting-basis amplitudes (tridiagonal, exact).
VectorXcd apply_j3_counting(SpinSector sector, const VectorXcd& amps);

}  // namespace pathsym

#endif
