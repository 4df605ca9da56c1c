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

#include "pathsym/states.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pathsym {

namespace {

/// Extends the coherent-state recurrence until the tail drops below eps;
/// returns the smallest adequate n_max, or -1 if none below `cap`.
int coherent_hint(double alpha, double eps, int cap = 1 << 20) {
  double c = std::exp(-alpha * alpha / 2.0);
  double mass = c * c;
  for (int n = 0; n < cap; ++n) {
    if (1.0 - mass < eps) return n;
    c *= alpha / std::sqrt(double(n + 1));
    mass += c * c;
  }
  return -1;
}

int squeezed_hint(double r, double eps, int cap = 1 << 20) {
  double c = 1.0 / std::sqrt(std::cosh(r));
  double mass = c * c;
  const double th = std::abs(std::tanh(r));
  for (int n = 0; n + 2 < cap; n += 2) {
    if (1.0 - mass < eps) return n;
    c *= th * std::sqrt(double(n + 1) * double(n + 2)) / double(n + 2);
    mass += c * c;
  }
  return -1;
}

std::string hint_text(int hint) {
  return hint >= 0 ? "need n_max >= " + std::to_string(hint)
                   : "no adequate n_max below the search cap";
}

}  // namespace

SingleModeAmps coherent_amps(double alpha, int n_max, double eps_trunc) {
  if (alpha < 0.0) throw std::invalid_argument("alpha must be non-negative");
  if (n_max < 0) throw std::invalid_argument("n_max must be non-negative");
  VectorXd c(n_max + 1);
  c[0] = std::exp(-alpha * alpha / 2.0);
  for (int n = 0; n < n_max; ++n) c[n + 1] = c[n] * alpha / std::sqrt(double(n + 1));
  const double remainder = std::max(0.0, 1.0 - c.squaredNorm());
  if (remainder >= eps_trunc) {
    const int hint = coherent_hint(alpha, eps_trunc);
    throw TruncationError("coherent amplitudes truncated too early (remainder " +
                              std::to_string(remainder) + "); " + hint_text(hint),
                          remainder, hint);
  }
  return SingleModeAmps{std::move(c), "coherent(alpha=" + std::to_string(alpha) + ")",
                        remainder};
}

SingleModeAmps squeezed_vacuum_amps(double r, int sign, int n_max, double eps_trunc) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
  if (n_max < 0) throw std::invalid_argument("n_max must be non-negative");
  VectorXd c = VectorXd::Zero(n_max + 1);
  c[0] = 1.0 / std::sqrt(std::cosh(r));
  const double factor = sign * std::tanh(r);
  for (int n = 0; n + 2 <= n_max; n += 2) {
    c[n + 2] = c[n] * factor * std::sqrt(double(n + 1) * double(n + 2)) / double(n + 2);
  }
  const double remainder = std::max(0.0, 1.0 - c.squaredNorm());
  if (remainder >= eps_trunc) {
    const int hint = squeezed_hint(r, eps_trunc);
    throw TruncationError("squeezed-vacuum amplitudes truncated too early (remainder " +
                              std::to_string(remainder) + "); " + hint_text(hint),
                          remainder, hint);
  }
  return SingleModeAmps{std::move(c),
                        "squeezed(r=" + std::to_string(r) +
                            ",sign=" + std::to_string(sign) + ")",
                        remainder};
}

SingleModeAmps number_amps(int n, int n_max) {
  if (n < 0) throw std::invalid_argument("photon number must be non-negative");
  if (n > n_max) {
    throw TruncationError("number state |" + std::to_string(n) +
                              "> does not fit below n_max " + std::to_string(n_max),
                          1.0, n);
  }
  VectorXd c = VectorXd::Zero(n_max + 1);
  c[n] = 1.0;
  return SingleModeAmps{std::move(c), "number(n=" + std::to_string(n) + ")", 0.0};
}

SingleModeAmps coherent_amps_auto(double alpha, const TruncationPolicy& policy) {
  for (int n_max = 16; n_max <= policy.n_max_cap; n_max *= 2) {
    try {
      return coherent_amps(alpha, n_max, policy.eps_trunc);
    } catch (const TruncationError&) {
      if (n_max * 2 > policy.n_max_cap) throw;
    }
  }
  return coherent_amps(alpha, policy.n_max_cap, policy.eps_trunc);
}

SingleModeAmps squeezed_vacuum_amps_auto(double r, int sign,
                                         const TruncationPolicy& policy) {
  for (int n_max = 16; n_max <= policy.n_max_cap; n_max *= 2) {
    try {
      return squeezed_vacuum_amps(r, sign, n_max, policy.eps_trunc);
    } catch (const TruncationError&) {
      if (n_max * 2 > policy.n_max_cap) throw;
    }
  }
  return squeezed_vacuum_amps(r, sign, policy.n_max_cap, policy.eps_trunc);
}

MultiSectorState::MultiSectorState(std::vector<WeightedSector> sectors,
                                   double remainder)
    : sectors_(std::move(sectors)), remainder_(remainder) {
  std::sort(sectors_.begin(), sectors_.end(),
            [](const WeightedSector& a, const WeightedSector& b) {
              return a.state.sector().n_photons < b.state.sector().n_photons;
            });
  double mass = remainder_;
  int prev_n = -1;
  for (const WeightedSector& ws : sectors_) {
    if (ws.weight <= 0.0) throw std::invalid_argument("sector weights must be positive");
    const int n = ws.state.sector().n_photons;
    if (n == prev_n) throw std::invalid_argument("duplicate sector N=" + std::to_string(n));
    prev_n = n;
    if (std::abs(ws.state.norm() - 1.0) > 1e-10) {
      throw std::invalid_argument("sector state N=" + std::to_string(n) +
                                  " is not normalized");
    }
    mass += ws.weight;
  }
  if (std::abs(mass - 1.0) > 1e-10) {
    throw std::invalid_argument("sector weights plus remainder must sum to 1, got " +
                                std::to_string(mass));
  }
}

double MultiSectorState::mean_n() const {
  double out = 0.0;
  for (const WeightedSector& ws : sectors_) out += ws.weight * ws.state.sector().n_photons;
  return out;
}

double MultiSectorState::mean_n_squared() const {
  double out = 0.0;
  for (const WeightedSector& ws : sectors_) {
    const double n = ws.state.sector().n_photons;
    out += ws.weight * n * n;
  }
  return out;
}

PureSector noon(int n) {
  if (n < 1) throw std::invalid_argument("NOON state needs at least one photon");
  VectorXcd amps = VectorXcd::Zero(n + 1);
  amps[0] = amps[n] = 1.0 / std::sqrt(2.0);
  return PureSector(SpinSector{n}, Basis::InternalJ3, std::move(amps));
}

MultiSectorState from_sector(PureSector state) {
  std::vector<WeightedSector> sectors;
  sectors.push_back(WeightedSector{1.0, std::move(state)});
  return MultiSectorState(std::move(sectors), 0.0);
}

MultiSectorState twin_fock(int n) {
  if (n < 1) throw std::invalid_argument("twin-Fock state needs at least one photon per port");
  const int total = 2 * n;
  VectorXcd amps = VectorXcd::Zero(total + 1);
  amps[n] = 1.0;  // outcome (n1, n2) = (n, n)
  return from_sector(PureSector(SpinSector{total}, Basis::CountingJ1, std::move(amps)));
}

MultiSectorState product_input(const SingleModeAmps& port1,
                               const SingleModeAmps& port2) {
  const int n1_max = port1.n_max();
  const int n2_max = port2.n_max();
  std::vector<WeightedSector> sectors;
  double kept = 0.0;
  for (int total = 0; total <= n1_max + n2_max; ++total) {
    const int d = total + 1;
    VectorXcd amps = VectorXcd::Zero(d);
    double w = 0.0;
    for (int i = 0; i < d; ++i) {
      const int n1 = total - i;
      const int n2 = i;
      if (n1 <= n1_max && n2 <= n2_max) {
        const double a = port1.amps[n1] * port2.amps[n2];
        amps[i] = a;
        w += a * a;
      }
    }
    if (w > 0.0) {
      amps /= std::sqrt(w);
      sectors.push_back(WeightedSector{
          w, PureSector(SpinSector{total}, Basis::CountingJ1, std::move(amps))});
      kept += w;
    }
  }
  return MultiSectorState(std::move(sectors), std::max(0.0, 1.0 - kept));
}

double total_qfi(const MultiSectorState& state) {
  double out = 0.0;
  for (const WeightedSector& ws : state.sectors()) {
    out += ws.weight * 4.0 * j3_moments(ws.state).variance();
  }
  return out;
}

MultiSectorState squeezed_coherent_state(double alpha, double r,
                                         const TruncationPolicy& policy) {
  const SingleModeAmps coh = coherent_amps_auto(alpha, policy);
  MultiSectorState plus = product_input(coh, squeezed_vacuum_amps_auto(r, +1, policy));
  if (r == 0.0) return plus;
  MultiSectorState minus = product_input(coh, squeezed_vacuum_amps_auto(r, -1, policy));
  return total_qfi(plus) >= total_qfi(minus) ? plus : minus;
}

MultiSectorState pair_state(double r, const TruncationPolicy& policy) {
  const SingleModeAmps first = squeezed_vacuum_amps_auto(r, +1, policy);
  MultiSectorState plus = product_input(first, first);
  if (r == 0.0) return plus;
  MultiSectorState minus =
      product_input(first, squeezed_vacuum_amps_auto(r, -1, policy));
  return total_qfi(plus) >= total_qfi(minus) ? plus : minus;
}

MultiSectorState number_coherent_state(int n, double alpha,
                                       const TruncationPolicy& policy) {
  const SingleModeAmps coh = coherent_amps_auto(alpha, policy);
  const int n_max = std::max(n, coh.n_max());
  return product_input(number_amps(n, n_max), coh);
}

}  // namespace pathsym
