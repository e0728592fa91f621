// Copyright 2026 The cpbskew Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cpbskew/measures.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "cpbskew/error.hpp"

namespace cpbskew {
namespace {

constexpr double kNormTol = 1e-9;
constexpr double kLeakTol = 1e-12;

void require_matching(const DensityMatrix& rho, const Observable& observable) {
  if (rho.dim() != observable.dim()) {
    throw InvalidDimension("density matrix is " + std::to_string(rho.dim()) +
                           "-dimensional but observable is " + std::to_string(observable.dim()));
  }
}

void require_normalized(const QubitFockState& state) {
  const double deviation = std::abs(state.norm() - 1.0);
  if (deviation > kNormTol) {
    throw NotNormalized("state norm deviates from 1 by " + std::to_string(deviation));
  }
}

// sigma_y ⊗ sigma_y, real in the product basis.
CMatrix spin_flip() {
  CMatrix m = CMatrix::Zero(4, 4);
  m(0, 3) = -1.0;
  m(1, 2) = 1.0;
  m(2, 1) = 1.0;
  m(3, 0) = -1.0;
  return m;
}

}  // namespace

double skew_information(const DensityMatrix& rho, const Observable& observable) {
  require_matching(rho, observable);
  const CMatrix root = psd_sqrt(rho);
  const CMatrix& h = observable.entries();
  const double local = (rho.entries() * h * h).trace().real();
  const double overlap = (root * h * root * h).trace().real();
  return std::max(0.0, local - overlap);
}

double skew_information_commutator(const DensityMatrix& rho, const Observable& observable) {
  require_matching(rho, observable);
  const CMatrix root = psd_sqrt(rho);
  const CMatrix& h = observable.entries();
  const CMatrix commutator = root * h - h * root;
  return std::max(0.0, -0.5 * (commutator * commutator).trace().real());
}

double concurrence_squared_pure(const QubitFockState& state) {
  require_normalized(state);
  const std::size_t n = state.fock_cutoff();
  double minors = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const Complex ek = state.amplitude(Level::excited, k);
    const Complex gk = state.amplitude(Level::ground, k);
    for (std::size_t l = k + 1; l < n; ++l) {
      const Complex minor =
          ek * state.amplitude(Level::ground, l) - state.amplitude(Level::excited, l) * gk;
      minors += std::norm(minor);
    }
  }
  const double norm2 = state.amplitudes().squaredNorm();
  return std::clamp(4.0 * minors / (norm2 * norm2), 0.0, 1.0);
}

double concurrence_pure(const QubitFockState& state) {
  return std::sqrt(concurrence_squared_pure(state));
}

double concurrence_wootters(const DensityMatrix& rho) {
  if (rho.dim() != 4) {
    throw InvalidDimension("Wootters concurrence needs a 4x4 density matrix, got " +
                           std::to_string(rho.dim()));
  }
  // The square roots of the eigenvalues of R = rho Y rho* Y are the singular
  // values of sqrt(rho) Y sqrt(rho)*, which avoids a non-Hermitian eigensolve.
  const CMatrix root = psd_sqrt(rho);
  const CMatrix flipped = root * spin_flip() * root.conjugate();
  Eigen::JacobiSVD<CMatrix> svd(flipped);
  const Eigen::VectorXd& s = svd.singularValues();  // descending
  const double c = s(0) - s(1) - s(2) - s(3);
  return std::clamp(c, 0.0, 1.0);
}

DensityMatrix two_level_joint_density(const QubitFockState& state, std::size_t lower_level) {
  const std::size_t n = state.fock_cutoff();
  if (lower_level + 1 >= n) {
    throw InvalidDimension("field levels " + std::to_string(lower_level) + "," +
                           std::to_string(lower_level + 1) + " exceed cutoff " +
                           std::to_string(n));
  }
  CVector psi(4);
  psi << state.amplitude(Level::excited, lower_level),
      state.amplitude(Level::excited, lower_level + 1), state.amplitude(Level::ground, lower_level),
      state.amplitude(Level::ground, lower_level + 1);
  const double leaked = state.amplitudes().squaredNorm() - psi.squaredNorm();
  if (leaked > kLeakTol) {
    throw InvalidDimension("state has weight " + std::to_string(leaked) +
                           " outside the two field levels");
  }
  CMatrix rho = psi * psi.adjoint();
  rho = 0.5 * (rho + rho.adjoint().eval());
  rho /= rho.trace().real();
  return DensityMatrix(rho);
}

double skew_from_concurrence(double concurrence) {
  if (!(concurrence >= 0.0 && concurrence <= 1.0)) {
    throw InvalidArgument("concurrence must lie in [0, 1], got " + std::to_string(concurrence));
  }
  return 1.0 + concurrence * concurrence;
}

double variance_sum_qubit(const QubitFockState& state) {
  const DensityMatrix rho = reduced_qubit_state(state);
  double total = 0.0;
  for (const CMatrix& pauli : {pauli_x(), pauli_y(), pauli_z()}) {
    total += expectation_and_variance(rho, Observable(pauli)).variance;
  }
  return total;
}

double wy_sum_qubit(const DensityMatrix& rho_qubit) {
  double total = 0.0;
  for (const CMatrix& pauli : {pauli_x(), pauli_y(), pauli_z()}) {
    total += skew_information(rho_qubit, Observable(pauli));
  }
  return total;
}

double von_neumann_entropy(const DensityMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(rho.entries(), Eigen::EigenvaluesOnly);
  double entropy = 0.0;
  for (const double p : solver.eigenvalues()) {
    if (p > 0.0) entropy -= p * std::log2(p);
  }
  return std::max(0.0, entropy);
}

Diagnostics diagnostics(const DensityMatrix& rho) {
  return {purity(rho), von_neumann_entropy(rho)};
}

Diagnostics diagnostics(const QubitFockState& state) {
  return diagnostics(reduced_qubit_state(state));
}

Diagnostics field_diagnostics(const QubitFockState& state) {
  return diagnostics(reduced_field_state(state));
}

MeasureReport measure(const QubitFockState& state) {
  const DensityMatrix rho = reduced_qubit_state(state);
  const double c2 = concurrence_squared_pure(state);
  const Diagnostics diag = diagnostics(rho);
  double variance_sum = 0.0;
  for (const CMatrix& pauli : {pauli_x(), pauli_y(), pauli_z()}) {
    variance_sum += expectation_and_variance(rho, Observable(pauli)).variance;
  }
  return MeasureReport{1.0 + c2,    wy_sum_qubit(rho), variance_sum,
                       std::sqrt(c2), diag.purity,     diag.entropy};
}

}  // namespace cpbskew
