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

// State families for two-path interferometry: NOON and twin-Fock states,
// and the states obtained by mixing two independent single-mode inputs
// (coherent, squeezed vacuum, photon number) at the entrance beam splitter.
//
// Product inputs are represented directly in the counting basis: the
// N-photon component has counting amplitudes proportional to
// c1[n1] * c2[n2] with (n1, n2) = (N - i, i). All single-mode
// constructors here produce real amplitudes; the squeezing orientation
// is a sign on the even-order terms, and family constructors pick the
// orientation that maximizes <J3^2> numerically.

#ifndef PATHSYM_STATES_HPP
#define PATHSYM_STATES_HPP

#include <string>
#include <vector>

#include "pathsym/config.hpp"
#include "pathsym/spinspace.hpp"

namespace pathsym {

/// Photon-number amplitudes of one input mode, truncated at n_max.
/// `remainder` is the probability mass above n_max.
struct SingleModeAmps {
  VectorXd amps;      // index = photon number, 0..n_max
  std::string label;  // human-readable description
  double remainder = 0.0;

  int n_max() const { return int(amps.size()) - 1; }
};

/// c_n = exp(-alpha^2/2) alpha^n / sqrt(n!), alpha >= 0.
/// Throws TruncationError (with an n_max hint) if the tail above n_max
/// exceeds eps_trunc.
SingleModeAmps coherent_amps(double alpha, int n_max, double eps_trunc = 1e-10);

/// Squeezed vacuum: c_{2k} = (sign tanh r)^k sqrt((2k)!) / (2^k k!) / sqrt(cosh r),
/// odd terms zero. sign in {+1,-1} selects the squeezing orientation.
SingleModeAmps squeezed_vacuum_amps(double r, int sign, int n_max,
                                    double eps_trunc = 1e-10);

/// Photon number state |n| (delta). Requires n <= n_max.
SingleModeAmps number_amps(int n, int n_max);

/// Auto-truncating versions: n_max grows in powers of two (from 16) until
/// the remainder is below policy.eps_trunc, capped at policy.n_max_cap.
SingleModeAmps coherent_amps_auto(double alpha, const TruncationPolicy& policy);
SingleModeAmps squeezed_vacuum_amps_auto(double r, int sign,
                                         const TruncationPolicy& policy);

struct WeightedSector {
  double weight;     // probability of finding this total photon number
  PureSector state;  // normalized sector state
};

/// Weighted collection of fixed-N sector states with a tracked
/// truncation remainder: sum of weights + remainder = 1 to 1e-10.
class MultiSectorState {
 public:
  MultiSectorState(std::vector<WeightedSector> sectors, double remainder);

  const std::vector<WeightedSector>& sectors() const { return sectors_; }
  double remainder() const { return remainder_; }

  double mean_n() const;           // sum w_N * N over kept sectors
  double mean_n_squared() const;   // sum w_N * N^2 over kept sectors

 private:
  std::vector<WeightedSector> sectors_;  // sorted by N, distinct
  double remainder_;
};

/// (|N,0> + |0,N>)/sqrt(2) in the J3 basis. n >= 1.
PureSector noon(int n);

/// Wraps a single sector as a weight-1 multi-sector state.
MultiSectorState from_sector(PureSector state);

/// Twin-Fock input |n,n>: one sector N = 2n, counting amplitude
/// concentrated on the balanced outcome. n >= 1.
MultiSectorState twin_fock(int n);

/// Mixes two independent single-mode inputs. Counting amplitudes of the
/// N-photon sector are the products c1[N-i] * c2[i], sector weights are
/// the summed squares. Both inputs vacuum yields the single N=0 sector.
MultiSectorState product_input(const SingleModeAmps& port1,
                               const SingleModeAmps& port2);

/// Coherent alpha in one port, squeezed vacuum r in the other, squeezing
/// orientation chosen to maximize <J3^2>.
MultiSectorState squeezed_coherent_state(double alpha, double r,
                                         const TruncationPolicy& policy = {});

/// Two squeezed vacua of equal strength interfering; relative orientation
/// chosen to maximize <J3^2>. Only even-N sectors carry weight.
MultiSectorState pair_state(double r, const TruncationPolicy& policy = {});

/// Photon number state |n> in one port, coherent alpha in the other.
MultiSectorState number_coherent_state(int n, double alpha,
                                       const TruncationPolicy& policy = {});

/// Weighted 4 Var(J3) summed over sectors (used to pick orientations and
/// by the metrology aggregation).
double total_qfi(const MultiSectorState& state);

}  // namespace pathsym

#endif
