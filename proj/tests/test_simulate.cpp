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

#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "pathsym/estimation.hpp"

using namespace pathsym;

namespace {

std::int64_t total_counts(const std::vector<SectorCounts>& counts) {
  std::int64_t sum = 0;
  for (const SectorCounts& sc : counts) {
    for (std::int64_t c : sc.counts) sum += c;
  }
  return sum;
}

}  // namespace

TEST_CASE("sampling: determinism, count conservation, single draw") {
  const MultiSectorState st = squeezed_coherent_state(1.2, 0.4);
  const auto a = sample_outcomes(st, 0.7, 5000, 99);
  const auto b = sample_outcomes(st, 0.7, 5000, 99);
  REQUIRE(a.size() == b.size());
  for (std::size_t s = 0; s < a.size(); ++s) {
    CHECK(a[s].n_photons == b[s].n_photons);
    CHECK(a[s].counts == b[s].counts);
  }
  CHECK(total_counts(a) == 5000);

  const auto c = sample_outcomes(st, 0.7, 5000, 100);
  bool any_differ = false;
  for (std::size_t s = 0; s < a.size(); ++s) any_differ |= a[s].counts != c[s].counts;
  CHECK(any_differ);

  CHECK(total_counts(sample_outcomes(st, 0.7, 1, 7)) == 1);
  CHECK_THROWS_AS(sample_outcomes(st, 0.7, 0, 7), std::invalid_argument);
}

TEST_CASE("sampled frequencies concentrate on the counting distribution") {
  const MultiSectorState st = from_sector(noon(2));
  const std::int64_t m = 1000000;
  const auto counts = sample_outcomes(st, 0.0, m, 4242);
  const VectorXd p = counting_probabilities(st.sectors()[0].state, 0.0);
  REQUIRE(counts.size() == 1);
  for (int i = 0; i < p.size(); ++i) {
    const double sigma = std::sqrt(std::max(p[i] * (1.0 - p[i]) * m, 1.0));
    CHECK(std::abs(double(counts[0].counts[i]) - p[i] * m) <= 4.0 * sigma);
  }

  // chi-square goodness of fit at a generic phase, not rejected at 1e-4
  const double phi = 0.83;
  const auto counts2 = sample_outcomes(st, phi, m, 777);
  const VectorXd q = counting_probabilities(st.sectors()[0].state, phi);
  double stat = 0.0;
  int dof = -1;
  for (int i = 0; i < q.size(); ++i) {
    if (q[i] * m < 10.0) continue;
    const double expect = q[i] * m;
    stat += std::pow(double(counts2[0].counts[i]) - expect, 2) / expect;
    ++dof;
  }
  REQUIRE(dof >= 1);
  CHECK(oracles::chi_square_tail(stat, dof) > 1e-4);
}

TEST_CASE("ML estimation: exact proportional counts recover the phase") {
  const MultiSectorState st = from_sector(noon(2));
  const double phi0 = 0.31;
  const VectorXd p = counting_probabilities(st.sectors()[0].state, phi0);
  std::vector<SectorCounts> counts(1);
  counts[0].n_photons = 2;
  for (int i = 0; i < p.size(); ++i) {
    counts[0].counts.push_back(std::llround(p[i] * 1e9));
  }
  const double hat = ml_estimate(counts, st, 0.3, 0.4, 801);
  CHECK(std::abs(hat - phi0) < 2e-5);
}

TEST_CASE("ML estimation: window must stay below the fringe ambiguity") {
  const MultiSectorState st = from_sector(noon(4));
  std::vector<SectorCounts> counts(1);
  counts[0].n_photons = 4;
  counts[0].counts = {1, 2, 3, 2, 1};
  CHECK_THROWS_AS(ml_estimate(counts, st, 0.3, M_PI / 4.0 + 0.01, 101),
                  std::invalid_argument);
  CHECK_THROWS_AS(ml_estimate(counts, st, 0.3, -1.0, 101), std::invalid_argument);
  CHECK_THROWS_AS(ml_estimate(counts, st, 0.3, 0.5, 2), std::invalid_argument);
}

TEST_CASE("flat likelihood is reported, not silently swallowed") {
  // the N=0 sector carries no phase dependence at all
  const MultiSectorState vac = product_input(number_amps(0, 0), number_amps(0, 0));
  std::vector<SectorCounts> counts(1);
  counts[0].n_photons = 0;
  counts[0].counts = {100};
  CHECK_THROWS_AS(ml_estimate(counts, vac, 0.3, 0.4, 101), EstimationError);
}

TEST_CASE("trial suite: deterministic summary and derived seeds") {
  const MultiSectorState st = from_sector(noon(2));
  TrialRun run;
  run.phi_true = 0.3;
  run.samples_per_trial = 2000;
  run.trials = 24;
  run.seed = 12345;
  run.window = 0.4;
  run.grid_points = 161;

  const TrialSummary a = crb_trial_suite(st, run);
  const TrialSummary b = crb_trial_suite(st, run);
  CHECK(a.empirical_mse == b.empirical_mse);
  CHECK(a.estimates == b.estimates);
  CHECK(a.trial_seeds == b.trial_seeds);
  REQUIRE(a.trial_seeds.size() == 24);
  for (std::size_t t = 0; t < a.trial_seeds.size(); ++t) {
    CHECK(a.trial_seeds[t] == derive_trial_seed(run.seed, t));
  }
  CHECK(a.crb == doctest::Approx(1.0 / (2000.0 * 4.0)).epsilon(1e-12));
  CHECK(a.ratio == doctest::Approx(a.empirical_mse / a.crb).epsilon(1e-12));
}

TEST_CASE("trial suite approaches the bound for symmetric states") {
  const MultiSectorState st = from_sector(noon(2));
  TrialRun run;
  run.phi_true = 0.3;
  run.samples_per_trial = 10000;
  run.trials = 60;
  run.seed = 2026;
  const TrialSummary sum = crb_trial_suite(st, run);
  CHECK(sum.ratio > 0.7);
  CHECK(sum.ratio < 1.3);
  CHECK(std::abs(sum.bias) < 3.0 * std::sqrt(sum.crb / run.trials));
}

TEST_CASE("asymmetric state misses the bound at its worst phase") {
  VectorXcd v(3);
  v << std::sqrt(0.8), 0.0, std::sqrt(0.2);
  const MultiSectorState st =
      from_sector(PureSector(SpinSector{2}, Basis::InternalJ3, v));

  // pick the worst counting phase on a grid
  double worst_phi = 0.0, worst_cfi = 1e300;
  for (int k = 1; k < 64; ++k) {
    const double phi = 2.0 * M_PI * k / 64.0;
    const double f = cfi_counting(st.sectors()[0].state, phi);
    if (f > 0.05 && f < worst_cfi) {  // needs some curvature to estimate at all
      worst_cfi = f;
      worst_phi = phi;
    }
  }
  TrialRun run;
  run.phi_true = worst_phi;
  run.samples_per_trial = 10000;
  run.trials = 60;
  run.seed = 515;
  run.window = 0.8;
  const TrialSummary sum = crb_trial_suite(st, run);
  // variance tracks 1/CFI, well above 1/QFI at this phase
  CHECK(sum.ratio > 1.5);
}

TEST_CASE("zero-sensitivity states cannot be simulated into an estimate") {
  VectorXcd top = VectorXcd::Zero(3);
  top[0] = 1.0;
  const MultiSectorState st =
      from_sector(PureSector(SpinSector{2}, Basis::InternalJ3, top));
  TrialRun run;
  run.phi_true = 0.3;
  run.samples_per_trial = 100;
  run.trials = 2;
  run.seed = 1;
  CHECK_THROWS_AS(crb_trial_suite(st, run), ZeroSensitivityError);
}
