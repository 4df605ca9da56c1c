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

#include "pathsym/estimation.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace pathsym {

namespace {

constexpr double kPFloor = 1e-14;    // probability floor for Fisher terms
constexpr double kAmpFloor = 1e-12;  // relative amplitude floor for ratios

using std::complex;
const complex<double> kI{0.0, 1.0};

struct EvolvedCounting {
  VectorXcd amps;   // <m1|psi(phi)>
  VectorXcd damps;  // d/dphi of the above = <m1|(-i J3)|psi(phi)>
};

EvolvedCounting evolve_counting(const PureSector& state, double phi) {
  const PureSector s3 = to_basis(state, Basis::InternalJ3);
  const int d = s3.sector().dim();
  VectorXcd shifted(d), dshifted(d);
  for (int i = 0; i < d; ++i) {
    const double m = s3.sector().m_at(i);
    const complex<double> ph = std::exp(-kI * phi * m);
    shifted[i] = ph * s3.amps()[i];
    dshifted[i] = -kI * m * shifted[i];
  }
  const MatrixXd& r = counting_basis_rotation(s3.sector());
  return EvolvedCounting{r.transpose() * shifted, r.transpose() * dshifted};
}

}  // namespace

double qfi_sector(const PureSector& state) {
  return 4.0 * j3_moments(state).variance();
}

VectorXd counting_probabilities(const PureSector& state, double phi) {
  const EvolvedCounting ev = evolve_counting(state, phi);
  VectorXd p = ev.amps.cwiseAbs2();
  if (std::abs(p.sum() - 1.0) > 1e-10) {
    throw std::logic_error("counting probabilities lost normalization");
  }
  return p;
}

double cfi_counting(const PureSector& state, double phi) {
  const EvolvedCounting ev = evolve_counting(state, phi);
  double f = 0.0;
  for (int i = 0; i < ev.amps.size(); ++i) {
    const double p = std::norm(ev.amps[i]);
    if (p >= kPFloor) {
      const double pdot = 2.0 * (std::conj(ev.amps[i]) * ev.damps[i]).real();
      f += pdot * pdot / p;
    } else {
      // A probability this small at a generic point contributes nothing;
      // at a fringe extremum it is a quadratic zero whose Fisher term has
      // the finite limit 4|d amp|^2.
      f += 4.0 * std::norm(ev.damps[i]);
    }
  }
  return f;
}

FisherResult fisher(const PureSector& state, double phi) {
  FisherResult out;
  out.qfi = qfi_sector(state);
  out.cfi_at_phi = cfi_counting(state, phi);
  out.phi = phi;
  if (out.gap() < -1e-8) {
    throw std::logic_error("classical Fisher information exceeded the quantum value");
  }
  return out;
}

EstimatorTable optimal_estimator(const PureSector& state, double phi, double tol) {
  const EvolvedCounting ev = evolve_counting(state, phi);
  const int d = int(ev.amps.size());

  EstimatorTable table;
  table.phi = phi;
  table.g = VectorXd::Zero(d);

  const double scale = ev.amps.cwiseAbs().maxCoeff();
  const double dscale = std::max(ev.damps.cwiseAbs().maxCoeff(), 1.0);
  for (int i = 0; i < d; ++i) {
    if (std::abs(ev.amps[i]) > kAmpFloor * scale) {
      // damps = -i J3 acting on the state, so the ratio needs no extra -i.
      const complex<double> ratio = ev.damps[i] / ev.amps[i];
      table.g[i] = ratio.real();
      table.imag_residual = std::max(table.imag_residual, std::abs(ratio.imag()));
    } else {
      table.excluded.push_back(i);
      if (std::abs(ev.damps[i]) > 1e-10 * dscale) {
        table.informative_outcome_excluded = true;
      }
    }
  }

  const double var = j3_moments(state).variance();
  table.lambda = 2.0 * var;
  table.zero_sensitivity = var <= 1e-14;
  table.achievable = table.imag_residual <= tol && !table.zero_sensitivity;
  return table;
}

RobustnessResult robustness(const PureSector& state, double phi) {
  const EstimatorTable table = optimal_estimator(state, phi);
  if (table.zero_sensitivity) {
    throw ZeroSensitivityError("state carries no phase information");
  }
  const double sum_sq = table.g.squaredNorm();
  if (sum_sq <= 0.0 || table.informative_outcome_excluded) {
    throw ZeroSensitivityError(
        "estimator is degenerate at this bias (informative outcome has zero "
        "probability); evaluate at a nearby phase");
  }
  RobustnessResult out;
  out.value = 1.0 / sum_sq;
  out.included = int(table.g.size()) - int(table.excluded.size());
  return out;
}

}  // namespace pathsym
