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

#include "pathsym/metrology.hpp"

#include <cmath>
#include <stdexcept>

#include "pathsym/estimation.hpp"

namespace pathsym {

SensitivityReport sensitivity_report(const MultiSectorState& state,
                                     std::span<const double> phi_grid,
                                     double max_remainder) {
  if (state.remainder() >= max_remainder) {
    throw TruncationError("state leaves " + std::to_string(state.remainder()) +
                              " probability mass untracked; the report would "
                              "misstate the photon-number ceiling",
                          state.remainder(), -1);
  }
  SensitivityReport out;
  out.remainder = state.remainder();
  out.mean_n = state.mean_n();
  out.heisenberg_limit = state.mean_n_squared();
  for (const WeightedSector& ws : state.sectors()) {
    const double q = qfi_sector(ws.state);
    out.per_sector.push_back(SectorSensitivity{ws.state.sector().n_photons, ws.weight, q});
    out.total_qfi += ws.weight * q;
  }
  out.ratio = out.heisenberg_limit > 0.0 ? out.total_qfi / out.heisenberg_limit : 0.0;
  if (out.ratio > 1.0 + 1e-8) {
    throw std::logic_error("sensitivity ratio exceeded the photon-number ceiling");
  }
  for (double phi : phi_grid) {
    out.cfi_samples.emplace_back(phi, cfi_total(state, phi));
  }
  return out;
}

double cfi_total(const MultiSectorState& state, double phi) {
  double f = 0.0;
  for (const WeightedSector& ws : state.sectors()) {
    // w * F_N <= w * N^2 < 1e-9 here: below double-precision relevance of
    // the total, and skipping avoids dense rotations for huge empty tails.
    const double n = ws.state.sector().n_photons;
    if (ws.weight * n * n < 1e-9 && ws.weight < 1e-12) continue;
    f += ws.weight * cfi_counting(ws.state, phi);
  }
  return f;
}

SqueezedCoherentMoments squeezed_coherent_moments(double alpha, double r, int sign) {
  if (alpha < 0.0) throw std::invalid_argument("alpha must be non-negative");
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
  const double sh = std::sinh(r);
  const double ch = std::cosh(r);
  const double a2 = alpha * alpha;
  SqueezedCoherentMoments out;
  out.qfi = a2 * std::exp(2.0 * sign * r) + sh * sh;
  out.n_squared = (a2 + sh * sh) * (a2 + sh * sh) + a2 + 2.0 * sh * sh * ch * ch;
  return out;
}

namespace {

/// Sensitivity ratio as a function of the intensity split q at fixed
/// total mean photon number. sinh^2 r is solved from
/// q exp(2r) = 4 (n_bar - sinh^2 r) by bisection (left side increases
/// with r, right side decreases).
double ratio_at_q(double q, double n_bar) {
  double lo = 0.0, hi = n_bar;
  for (int iter = 0; iter < 200; ++iter) {
    const double s = 0.5 * (lo + hi);
    const double e2r = 1.0 + 2.0 * s + 2.0 * std::sqrt(s * (s + 1.0));
    (q * e2r < 4.0 * (n_bar - s) ? lo : hi) = s;
  }
  const double s = 0.5 * (lo + hi);
  const double alpha = std::sqrt(std::max(n_bar - s, 0.0));
  const double r = 0.5 * std::log(1.0 + 2.0 * s + 2.0 * std::sqrt(s * (s + 1.0)));
  const SqueezedCoherentMoments m = squeezed_coherent_moments(alpha, r, +1);
  return m.qfi / m.n_squared;
}

}  // namespace

QOptimum optimize_q(double n_bar_total) {
  if (n_bar_total <= 0.0) {
    throw std::invalid_argument("mean photon number must be positive");
  }
  constexpr int kGridPoints = 64;
  const double q_lo = 0.05, q_hi = 50.0;

  int best = 0;
  double best_val = -1.0;
  double qs[kGridPoints];
  for (int k = 0; k < kGridPoints; ++k) {
    qs[k] = q_lo * std::exp(std::log(q_hi / q_lo) * k / double(kGridPoints - 1));
    const double v = ratio_at_q(qs[k], n_bar_total);
    if (v > best_val) {
      best_val = v;
      best = k;
    }
  }

  double a = qs[std::max(best - 1, 0)];
  double b = qs[std::min(best + 1, kGridPoints - 1)];
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
  double f1 = ratio_at_q(x1, n_bar_total), f2 = ratio_at_q(x2, n_bar_total);
  while (b - a > 1e-6) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + gr * (b - a);
      f2 = ratio_at_q(x2, n_bar_total);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - gr * (b - a);
      f1 = ratio_at_q(x1, n_bar_total);
    }
  }
  QOptimum out;
  out.q_star = 0.5 * (a + b);
  out.ratio_star = ratio_at_q(out.q_star, n_bar_total);
  return out;
}

double pair_state_ratio(double r, const TruncationPolicy& policy) {
  if (r <= 0.0) throw std::invalid_argument("squeezing strength must be positive");
  const SensitivityReport rep = sensitivity_report(pair_state(r, policy));
  return rep.ratio;
}

double equivalent_squeezing_db(int n) {
  if (n < 0) throw std::invalid_argument("photon number must be non-negative");
  return 10.0 * std::log10(2.0 * n + 1.0);
}

}  // namespace pathsym
