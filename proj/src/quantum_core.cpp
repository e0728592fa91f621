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

#include "cpbskew/quantum_core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include <Eigen/Eigenvalues>

#include "cpbskew/error.hpp"

namespace cpbskew {
namespace {

constexpr double kHermitianTol = 1e-12;
constexpr double kTraceTol = 1e-12;
constexpr double kNegativeEigenTol = 1e-10;
constexpr double kNormTol = 1e-9;

using Index = Eigen::Index;

Index as_index(std::size_t i) { return static_cast<Index>(i); }

void require_square(const CMatrix& m, const char* what) {
  if (m.rows() == 0 || m.rows() != m.cols()) {
    throw InvalidDimension(std::string(what) + ": expected a non-empty square matrix, got " +
                           std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
}

void require_normalized(const QubitFockState& state) {
  const double deviation = std::abs(state.norm() - 1.0);
  if (deviation > kNormTol) {
    throw NotNormalized("state norm deviates from 1 by " + std::to_string(deviation));
  }
}

// Eigenvalues below this are indistinguishable from zero for a Hermitian
// solver working in double precision.
double rank_floor(const Eigen::VectorXd& eigenvalues) {
  const double scale = std::max(1.0, eigenvalues.cwiseAbs().maxCoeff());
  return 64.0 * std::numeric_limits<double>::epsilon() * static_cast<double>(eigenvalues.size()) *
         scale;
}

}  // namespace

double max_abs(const CMatrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

QubitFockState::QubitFockState(std::size_t fock_cutoff)
    : cutoff_(fock_cutoff), amplitudes_(CVector::Zero(as_index(2 * fock_cutoff))) {
  if (fock_cutoff == 0) throw InvalidDimension("Fock cutoff must be at least 1");
}

QubitFockState::QubitFockState(std::size_t fock_cutoff, CVector amplitudes)
    : cutoff_(fock_cutoff), amplitudes_(std::move(amplitudes)) {
  if (fock_cutoff == 0) throw InvalidDimension("Fock cutoff must be at least 1");
  if (amplitudes_.size() != as_index(2 * fock_cutoff)) {
    throw InvalidDimension("amplitude vector has length " + std::to_string(amplitudes_.size()) +
                           ", expected " + std::to_string(2 * fock_cutoff));
  }
}

QubitFockState QubitFockState::basis(std::size_t fock_cutoff, Level level, std::size_t photons) {
  QubitFockState state(fock_cutoff);
  state.amplitude(level, photons) = 1.0;
  return state;
}

Complex QubitFockState::amplitude(Level level, std::size_t photons) const {
  if (photons >= cutoff_) {
    throw InvalidDimension("photon number " + std::to_string(photons) + " outside cutoff " +
                           std::to_string(cutoff_));
  }
  return amplitudes_(as_index(index(cutoff_, level, photons)));
}

Complex& QubitFockState::amplitude(Level level, std::size_t photons) {
  if (photons >= cutoff_) {
    throw InvalidDimension("photon number " + std::to_string(photons) + " outside cutoff " +
                           std::to_string(cutoff_));
  }
  return amplitudes_(as_index(index(cutoff_, level, photons)));
}

DensityMatrix::DensityMatrix(CMatrix entries) : entries_(std::move(entries)) {
  require_square(entries_, "density matrix");
  const double asym = max_abs(entries_ - entries_.adjoint());
  if (asym > kHermitianTol) {
    throw NotHermitian("density matrix is not Hermitian (max |M - M^H| = " +
                       std::to_string(asym) + ")");
  }
  const double trace_error = std::abs(entries_.trace() - Complex(1.0));
  if (trace_error > kTraceTol) {
    throw NotNormalized("density matrix trace deviates from 1 by " + std::to_string(trace_error));
  }
}

bool DensityMatrix::satisfies_invariants() const {
  if (max_abs(entries_ - entries_.adjoint()) > kHermitianTol) return false;
  if (std::abs(entries_.trace() - Complex(1.0)) > kTraceTol) return false;
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(entries_, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff() >= -kNegativeEigenTol;
}

Observable::Observable(CMatrix entries) : entries_(std::move(entries)) {
  require_square(entries_, "observable");
  const double asym = max_abs(entries_ - entries_.adjoint());
  if (asym > kHermitianTol) {
    throw NotHermitian("observable is not Hermitian (max |A - A^H| = " + std::to_string(asym) +
                       ")");
  }
}

CMatrix pauli_x() {
  CMatrix m(2, 2);
  m << 0.0, 1.0, 1.0, 0.0;
  return m;
}

CMatrix pauli_y() {
  CMatrix m(2, 2);
  m << 0.0, -kI, kI, 0.0;
  return m;
}

CMatrix pauli_z() {
  CMatrix m(2, 2);
  m << 1.0, 0.0, 0.0, -1.0;
  return m;
}

Operators build_operators(std::size_t fock_cutoff) {
  if (fock_cutoff == 0) throw InvalidDimension("Fock cutoff must be at least 1");
  const Index n = as_index(fock_cutoff);
  CMatrix a = CMatrix::Zero(n, n);
  for (Index k = 1; k < n; ++k) a(k - 1, k) = std::sqrt(static_cast<double>(k));
  CMatrix a_dag = a.adjoint();
  return Operators{std::move(a),
                   std::move(a_dag),
                   Observable(pauli_x()),
                   Observable(pauli_y()),
                   Observable(pauli_z()),
                   CMatrix::Identity(n, n),
                   CMatrix::Identity(2, 2)};
}

CMatrix kronecker(const CMatrix& left, const CMatrix& right) {
  CMatrix out(left.rows() * right.rows(), left.cols() * right.cols());
  for (Index i = 0; i < left.rows(); ++i) {
    for (Index j = 0; j < left.cols(); ++j) {
      out.block(i * right.rows(), j * right.cols(), right.rows(), right.cols()) =
          left(i, j) * right;
    }
  }
  return out;
}

CMatrix embed_qubit(const CMatrix& op, std::size_t fock_cutoff) {
  const Index n = as_index(fock_cutoff);
  return kronecker(op, CMatrix::Identity(n, n));
}

CMatrix embed_field(const CMatrix& op) { return kronecker(CMatrix::Identity(2, 2), op); }

namespace {

// Row q of the returned 2 x N matrix holds the amplitudes for qubit level q,
// so rho_q = M M^H and rho_f^T = M^T conj(M).
CMatrix coefficient_matrix(const QubitFockState& state) {
  const Index n = as_index(state.fock_cutoff());
  CMatrix m(2, n);
  m.row(0) = state.amplitudes().head(n).transpose();
  m.row(1) = state.amplitudes().tail(n).transpose();
  return m;
}

CMatrix hermitian_part(const CMatrix& m) { return 0.5 * (m + m.adjoint()); }

}  // namespace

DensityMatrix reduced_qubit_state(const QubitFockState& state) {
  require_normalized(state);
  const CMatrix m = coefficient_matrix(state);
  CMatrix rho = hermitian_part(m * m.adjoint());
  rho /= rho.trace().real();
  return DensityMatrix(std::move(rho));
}

DensityMatrix reduced_field_state(const QubitFockState& state) {
  require_normalized(state);
  const CMatrix m = coefficient_matrix(state);
  // rho_f[k][l] = sum_q amp(q,k) conj(amp(q,l))
  CMatrix rho = hermitian_part(m.transpose() * m.conjugate());
  rho /= rho.trace().real();
  return DensityMatrix(std::move(rho));
}

CMatrix psd_sqrt(const DensityMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(rho.entries());
  if (solver.info() != Eigen::Success) {
    throw NotPositiveSemidefinite("eigendecomposition failed");
  }
  Eigen::VectorXd values = solver.eigenvalues();
  if (values.minCoeff() < -kNegativeEigenTol) {
    throw NotPositiveSemidefinite("eigenvalue " + std::to_string(values.minCoeff()) +
                                  " below -1e-10");
  }
  const double floor = rank_floor(values);
  for (Index i = 0; i < values.size(); ++i) {
    values(i) = values(i) <= floor ? 0.0 : std::sqrt(values(i));
  }
  const CMatrix& vectors = solver.eigenvectors();
  return hermitian_part(vectors * values.cast<Complex>().asDiagonal() * vectors.adjoint());
}

double purity(const DensityMatrix& rho) {
  // Tr(rho^2) = sum |rho_ij|^2 for Hermitian rho.
  return rho.entries().cwiseAbs2().sum();
}

Moments expectation_and_variance(const DensityMatrix& rho, const Observable& op) {
  if (rho.dim() != op.dim()) {
    throw InvalidDimension("density matrix is " + std::to_string(rho.dim()) +
                           "-dimensional but observable is " + std::to_string(op.dim()));
  }
  const CMatrix& a = op.entries();
  const CMatrix rho_a = rho.entries() * a;
  const double mean = rho_a.trace().real();
  const double second = (rho_a * a).trace().real();
  return {mean, std::max(0.0, second - mean * mean)};
}

Moments expectation_and_variance(const QubitFockState& state, const Observable& op) {
  if (state.dim() != op.dim()) {
    throw InvalidDimension("state is " + std::to_string(state.dim()) +
                           "-dimensional but observable is " + std::to_string(op.dim()));
  }
  const CVector a_psi = op.entries() * state.amplitudes();
  const double mean = state.amplitudes().dot(a_psi).real();
  const double second = a_psi.squaredNorm();
  return {mean, std::max(0.0, second - mean * mean)};
}

}  // namespace cpbskew
