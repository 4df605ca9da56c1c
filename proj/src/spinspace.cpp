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

#include "pathsym/spinspace.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <complex>
#include <map>
#include <mutex>
#include <stdexcept>

namespace pathsym {

namespace {

constexpr double kHermTol = 1e-12;
constexpr double kImagTol = 1e-10;

using std::complex;
const complex<double> kI{0.0, 1.0};

/// Off-diagonal ladder couplings t_i between indices i and i+1,
/// t_i = sqrt((i+1)(N-i))/2.
VectorXd ladder_couplings(int n_photons) {
  const int d = n_photons + 1;
  VectorXd t(std::max(d - 1, 0));
  for (int i = 0; i + 1 < d; ++i) {
    t[i] = 0.5 * std::sqrt(double(i + 1) * double(n_photons - i));
  }
  return t;
}

}  // namespace

HermitianOp::HermitianOp(SpinSector sector_in, MatrixXcd matrix_in)
    : sector(sector_in), matrix(std::move(matrix_in)) {
  const int d = sector.dim();
  if (matrix.rows() != d || matrix.cols() != d) {
    throw DimensionError("operator matrix does not match sector dimension");
  }
  const double dev = (matrix - matrix.adjoint()).cwiseAbs().maxCoeff();
  if (dev > kHermTol) {
    throw std::invalid_argument("matrix is not Hermitian (deviation " +
                                std::to_string(dev) + ")");
  }
}

PureSector::PureSector(SpinSector sector, Basis basis, VectorXcd amps,
                       bool require_normalized)
    : sector_(sector), basis_(basis), amps_(std::move(amps)) {
  if (amps_.size() != sector_.dim()) {
    throw DimensionError("amplitude vector does not match sector dimension");
  }
  if (require_normalized && std::abs(amps_.squaredNorm() - 1.0) > 1e-12) {
    throw std::invalid_argument("state is not normalized");
  }
}

JOperators build_j_operators(SpinSector sector) {
  const int d = sector.dim();
  const VectorXd t = ladder_couplings(sector.n_photons);
  MatrixXcd j1 = MatrixXcd::Zero(d, d);
  MatrixXcd j2 = MatrixXcd::Zero(d, d);
  MatrixXcd j3 = MatrixXcd::Zero(d, d);
  for (int i = 0; i < d; ++i) j3(i, i) = sector.m_at(i);
  for (int i = 0; i + 1 < d; ++i) {
    j1(i, i + 1) = t[i];
    j1(i + 1, i) = t[i];
    j2(i, i + 1) = -kI * t[i];
    j2(i + 1, i) = kI * t[i];
  }
  return JOperators{HermitianOp(sector, std::move(j1)),
                    HermitianOp(sector, std::move(j2)),
                    HermitianOp(sector, std::move(j3))};
}

const MatrixXd& counting_basis_rotation(SpinSector sector) {
  static std::mutex mu;
  static std::map<int, MatrixXd> cache;
  {
    std::scoped_lock lock(mu);
    auto it = cache.find(sector.n_photons);
    if (it != cache.end()) return it->second;
  }

  // Built outside the lock so concurrent scans over distinct sectors do
  // not serialize; on a first-touch collision the earliest insert wins.
  const int d = sector.dim();
  const VectorXd t = ladder_couplings(sector.n_photons);
  MatrixXd k = MatrixXd::Zero(d, d);  // -i J2, real antisymmetric
  for (int i = 0; i + 1 < d; ++i) {
    k(i, i + 1) = -t[i];
    k(i + 1, i) = t[i];
  }
  MatrixXd r = ((M_PI / 2.0) * k).exp();
  std::scoped_lock lock(mu);
  return cache.emplace(sector.n_photons, std::move(r)).first->second;
}

VectorXcd counting_phase_alignment(SpinSector sector) {
  static const complex<double> cycle[4] = {
      {1.0, 0.0}, {0.0, -1.0}, {-1.0, 0.0}, {0.0, 1.0}};
  VectorXcd w(sector.dim());
  for (int i = 0; i < sector.dim(); ++i) w[i] = cycle[i & 3];
  return w;
}

PureSector to_basis(const PureSector& state, Basis target) {
  if (state.basis() == target) return state;
  const MatrixXd& r = counting_basis_rotation(state.sector());
  VectorXcd out = (target == Basis::InternalJ3) ? VectorXcd(r * state.amps())
                                                : VectorXcd(r.transpose() * state.amps());
  return PureSector(state.sector(), target, std::move(out),
                    /*require_normalized=*/false);
}

PureSector apply_phase_shift(const PureSector& state, double phi) {
  if (state.basis() == Basis::CountingJ1) {
    return to_basis(apply_phase_shift(to_basis(state, Basis::InternalJ3), phi),
                    Basis::CountingJ1);
  }
  VectorXcd out = state.amps();
  for (int i = 0; i < out.size(); ++i) {
    out[i] *= std::exp(-kI * phi * state.sector().m_at(i));
  }
  return PureSector(state.sector(), Basis::InternalJ3, std::move(out),
                    /*require_normalized=*/false);
}

double expectation(const PureSector& state, const HermitianOp& op) {
  if (!(state.sector() == op.sector)) {
    throw DimensionError("state and operator sectors differ");
  }
  const PureSector s3 = to_basis(state, Basis::InternalJ3);
  const complex<double> val = s3.amps().dot(op.matrix * s3.amps());
  if (std::abs(val.imag()) > kImagTol) {
    throw std::logic_error("expectation value has imaginary residual " +
                           std::to_string(val.imag()));
  }
  return val.real();
}

double estimator_slope(const PureSector& state, const HermitianOp& a) {
  if (!(state.sector() == a.sector)) {
    throw DimensionError("state and operator sectors differ");
  }
  const PureSector s3 = to_basis(state, Basis::InternalJ3);
  const VectorXcd& v = s3.amps();
  VectorXcd j3v(v.size());
  for (int i = 0; i < v.size(); ++i) j3v[i] = state.sector().m_at(i) * v[i];
  const complex<double> val = v.dot(a.matrix * j3v);  // <psi|A J3|psi>
  return 2.0 * val.imag();
}

std::pair<double, double> uncertainty_product_check(const PureSector& state,
                                                    const HermitianOp& a) {
  const PureSector s3 = to_basis(state, Basis::InternalJ3);
  const J3Moments m3 = j3_moments(s3);
  const VectorXcd av = a.matrix * s3.amps();
  const double a_mean = s3.amps().dot(av).real();
  const double a_second = av.squaredNorm();
  const double delta_j3 = std::sqrt(std::max(m3.variance(), 0.0));
  const double delta_a = std::sqrt(std::max(a_second - a_mean * a_mean, 0.0));
  const double lhs = delta_j3 * delta_a;
  const double rhs = 0.5 * estimator_slope(s3, a);
  if (lhs < rhs - 1e-10) {
    throw std::logic_error("uncertainty product fell below the slope bound");
  }
  return {lhs, rhs};
}

J3Moments j3_moments(const PureSector& state) {
  const VectorXcd& v = state.amps();
  J3Moments out;
  if (state.basis() == Basis::InternalJ3) {
    for (int i = 0; i < v.size(); ++i) {
      const double p = std::norm(v[i]);
      const double m = state.sector().m_at(i);
      out.mean += m * p;
      out.second += m * m * p;
    }
  } else {
    const VectorXcd sv = apply_j3_counting(state.sector(), v);
    out.mean = v.dot(sv).real();
    out.second = sv.squaredNorm();
  }
  return out;
}

VectorXcd apply_j3_counting(SpinSector sector, const VectorXcd& amps) {
  if (amps.size() != sector.dim()) {
    throw DimensionError("amplitude vector does not match sector dimension");
  }
  // R^T J3 R = -(J1 tridiagonal structure), exact in this convention.
  const VectorXd t = ladder_couplings(sector.n_photons);
  VectorXcd out = VectorXcd::Zero(amps.size());
  for (int i = 0; i + 1 < amps.size(); ++i) {
    out[i] -= t[i] * amps[i + 1];
    out[i + 1] -= t[i] * amps[i];
  }
  return out;
}

}  // namespace pathsym
