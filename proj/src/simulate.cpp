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

#include "pathsym/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <random>
#include <stdexcept>
#include <thread>

#include "pathsym/estimation.hpp"

namespace pathsym {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

/// Uniform double in [0, 1) with 53 random bits (portable across platforms,
/// unlike std::uniform_real_distribution).
double uniform01(std::mt19937_64& rng) {
  return double(rng() >> 11) * 0x1.0p-53;
}

int max_sector_n(const MultiSectorState& state) {
  int n = 0;
  for (const WeightedSector& ws : state.sectors()) {
    n = std::max(n, ws.state.sector().n_photons);
  }
  return n;
}

void validate_window(const MultiSectorState& state, double window) {
  if (window <= 0.0) throw std::invalid_argument("window must be positive");
  const int n_max = max_sector_n(state);
  if (n_max >= 1 && window >= M_PI / n_max) {
    throw std::invalid_argument(
        "window " + std::to_string(window) + " is not below the fringe ambiguity pi/" +
        std::to_string(n_max) + "; shrink it for a local estimate");
  }
}

/// Log likelihood per outcome on a phase grid, flattened over
/// (sector, outcome) in sector order.
struct LikelihoodGrid {
  std::vector<double> phis;
  std::vector<std::vector<double>> log_p;  // [grid point][flat outcome]
  std::vector<int> offsets;                // flat offset per sector

  LikelihoodGrid(const MultiSectorState& state, double center, double window,
                 int grid_points) {
    if (grid_points < 3) throw std::invalid_argument("need at least 3 grid points");
    validate_window(state, window);
    int total = 0;
    for (const WeightedSector& ws : state.sectors()) {
      offsets.push_back(total);
      total += ws.state.sector().dim();
    }
    phis.resize(grid_points);
    log_p.assign(grid_points, std::vector<double>(total));
    for (int k = 0; k < grid_points; ++k) {
      phis[k] = center - window / 2.0 + window * k / double(grid_points - 1);
      int at = 0;
      for (const WeightedSector& ws : state.sectors()) {
        const VectorXd p = counting_probabilities(ws.state, phis[k]);
        for (int i = 0; i < p.size(); ++i) {
          log_p[k][at++] = std::log(std::max(ws.weight * p[i], 1e-300));
        }
      }
    }
  }
};

double ml_on_grid(const LikelihoodGrid& grid, const std::vector<SectorCounts>& counts,
                  const MultiSectorState& state) {
  // Sparse view of the counts in the flat layout.
  std::vector<std::pair<int, double>> observed;
  for (const SectorCounts& sc : counts) {
    int sector_idx = -1;
    for (std::size_t s = 0; s < state.sectors().size(); ++s) {
      if (state.sectors()[s].state.sector().n_photons == sc.n_photons) {
        sector_idx = int(s);
        break;
      }
    }
    if (sector_idx < 0) {
      throw std::invalid_argument("counts refer to sector N=" +
                                  std::to_string(sc.n_photons) +
                                  " absent from the state");
    }
    for (std::size_t i = 0; i < sc.counts.size(); ++i) {
      if (sc.counts[i] != 0) {
        observed.emplace_back(grid.offsets[sector_idx] + int(i), double(sc.counts[i]));
      }
    }
  }
  if (observed.empty()) throw EstimationError("no counts to estimate from");

  const int g = int(grid.phis.size());
  std::vector<double> ll(g);
  for (int k = 0; k < g; ++k) {
    double sum = 0.0;
    for (const auto& [flat, c] : observed) sum += c * grid.log_p[k][flat];
    ll[k] = sum;
  }

  int best = 0;
  for (int k = 1; k < g; ++k) {
    if (ll[k] > ll[best]) best = k;
  }
  const double span = *std::max_element(ll.begin(), ll.end()) -
                      *std::min_element(ll.begin(), ll.end());
  if (span < 1e-9 * (std::abs(ll[best]) + 1.0)) {
    throw EstimationError("likelihood is flat across the window");
  }

  if (best == 0 || best == g - 1) return grid.phis[best];
  const double l0 = ll[best - 1], l1 = ll[best], l2 = ll[best + 1];
  const double denom = l0 - 2.0 * l1 + l2;
  if (denom >= 0.0) return grid.phis[best];
  const double step = grid.phis[1] - grid.phis[0];
  const double shift = 0.5 * (l0 - l2) / denom;
  return grid.phis[best] + step * std::clamp(shift, -1.0, 1.0);
}

}  // namespace

std::uint64_t derive_trial_seed(std::uint64_t master, std::uint64_t index) {
  return splitmix64(master + 0x9E3779B97F4A7C15ull * (index + 1));
}

std::vector<SectorCounts> sample_outcomes(const MultiSectorState& state, double phi,
                                          std::int64_t samples, std::uint64_t seed) {
  if (samples < 1) throw std::invalid_argument("need at least one sample");

  // Flat cumulative distribution over (sector, outcome). Weights are
  // renormalized over the kept sectors; the truncation remainder is
  // sub-1e-10 by construction.
  std::vector<double> cdf;
  std::vector<std::pair<int, int>> labels;  // (sector index, outcome index)
  double mass = 0.0;
  for (std::size_t s = 0; s < state.sectors().size(); ++s) {
    const WeightedSector& ws = state.sectors()[s];
    const VectorXd p = counting_probabilities(ws.state, phi);
    for (int i = 0; i < p.size(); ++i) {
      mass += ws.weight * p[i];
      cdf.push_back(mass);
      labels.emplace_back(int(s), i);
    }
  }
  for (double& c : cdf) c /= mass;

  std::vector<SectorCounts> out;
  for (const WeightedSector& ws : state.sectors()) {
    out.push_back(SectorCounts{ws.state.sector().n_photons,
                               std::vector<std::int64_t>(ws.state.sector().dim(), 0)});
  }
  std::mt19937_64 rng(seed);
  for (std::int64_t k = 0; k < samples; ++k) {
    const double u = uniform01(rng);
    const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    const auto [sec, idx] = labels[std::min<std::size_t>(it - cdf.begin(), cdf.size() - 1)];
    ++out[sec].counts[idx];
  }
  return out;
}

double ml_estimate(const std::vector<SectorCounts>& counts, const MultiSectorState& state,
                   double phi_center, double window, int grid_points) {
  const LikelihoodGrid grid(state, phi_center, window, grid_points);
  return ml_on_grid(grid, counts, state);
}

TrialSummary crb_trial_suite(const MultiSectorState& state, const TrialRun& run) {
  if (run.samples_per_trial < 1) throw std::invalid_argument("samples_per_trial must be >= 1");
  if (run.trials < 1) throw std::invalid_argument("trials must be >= 1");
  const double qfi = total_qfi(state);
  if (qfi <= 1e-14) throw ZeroSensitivityError("state carries no phase information");

  const LikelihoodGrid grid(state, run.phi_true, run.window, run.grid_points);

  TrialSummary out;
  out.trial_seeds.resize(run.trials);
  out.estimates.resize(run.trials);
  for (int t = 0; t < run.trials; ++t) {
    out.trial_seeds[t] = derive_trial_seed(run.seed, std::uint64_t(t));
  }

  const int workers =
      std::max(1u, std::min(std::thread::hardware_concurrency(), unsigned(run.trials)));
  std::vector<std::thread> pool;
  std::exception_ptr first_error;
  std::mutex error_mu;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (int t = w; t < run.trials; t += workers) {
          const auto counts = sample_outcomes(state, run.phi_true,
                                              run.samples_per_trial, out.trial_seeds[t]);
          out.estimates[t] = ml_on_grid(grid, counts, state);
        }
      } catch (...) {
        std::scoped_lock lock(error_mu);
        if (!first_error) first_error = std::current_exception();
      }
    });
  }
  for (std::thread& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);

  double mse = 0.0, mean = 0.0;
  for (double est : out.estimates) {
    mse += (est - run.phi_true) * (est - run.phi_true);
    mean += est;
  }
  mse /= run.trials;
  mean /= run.trials;
  double var = 0.0;
  for (double est : out.estimates) var += (est - mean) * (est - mean);

  out.empirical_mse = mse;
  out.empirical_variance = var / run.trials;
  out.bias = mean - run.phi_true;
  out.crb = 1.0 / (double(run.samples_per_trial) * qfi);
  out.ratio = out.empirical_mse / out.crb;
  return out;
}

}  // namespace pathsym
