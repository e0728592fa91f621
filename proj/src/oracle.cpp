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

#include "cpbskew/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include <Eigen/Eigenvalues>

#include "cpbskew/error.hpp"

namespace cpbskew {
namespace {

constexpr double kHermitianTol = 1e-12;

}  // namespace

TruncatedHamiltonian::TruncatedHamiltonian(CMatrix matrix, std::size_t fock_cutoff,
                                           JcParameters params)
    : matrix_(std::move(matrix)), cutoff_(fock_cutoff), params_(params) {
  const auto dim = static_cast<Eigen::Index>(2 * fock_cutoff);
  if (matrix_.rows() != dim || matrix_.cols() != dim) {
    throw InvalidDimension("Hamiltonian must be " + std::to_string(dim) + "x" +
                           std::to_string(dim));
  }
  const double asym = max_abs(matrix_ - matrix_.adjoint());
  if (asym > kHermitianTol) {
    throw NotHermitian("Hamiltonian is not Hermitian (max |H - H^H| = " + std::to_string(asym) +
                       ")");
  }
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(matrix_);
  if (solver.info() != Eigen::Success) throw Error("Hamiltonian eigendecomposition failed");
  eigenvalues_ = solver.eigenvalues();
  eigenvectors_ = solver.eigenvectors();
}

TruncatedHamiltonian build_jc_hamiltonian(const JcParameters& params, std::size_t fock_cutoff) {
  if (fock_cutoff < 2) {
    throw InvalidDimension("Hamiltonian needs a Fock cutoff of at least 2, got " +
                           std::to_string(fock_cutoff));
  }
  const Operators ops = build_operators(fock_cutoff);
  CMatrix raise(2, 2);  // |e><g|
  raise << 0.0, 1.0, 0.0, 0.0;
  const CMatrix lower = raise.adjoint();

  CMatrix h = params.detuning * embed_qubit(ops.sigma_z.entries(), fock_cutoff) +
              kronecker(raise, ops.annihilation) + kronecker(lower, ops.creation);
  h *= params.rabi;
  return TruncatedHamiltonian(std::move(h), fock_cutoff, params);
}

QubitFockState exact_evolve(const TruncatedHamiltonian& hamiltonian, const QubitFockState& psi0,
                            double time) {
  if (psi0.fock_cutoff() != hamiltonian.fock_cutoff()) {
    throw InvalidDimension("state cutoff " + std::to_string(psi0.fock_cutoff()) +
                           " does not match Hamiltonian cutoff " +
                           std::to_string(hamiltonian.fock_cutoff()));
  }
  if (time == 0.0) return psi0;
  const CMatrix& v = hamiltonian.eigenvectors();
  CVector coeffs = v.adjoint() * psi0.amplitudes();
  const Eigen::VectorXd& energies = hamiltonian.eigenvalues();
  for (Eigen::Index i = 0; i < coeffs.size(); ++i) {
    coeffs(i) *= std::polar(1.0, -energies(i) * time);
  }
  return QubitFockState(psi0.fock_cutoff(), v * coeffs);
}

double phase_aligned_distance(const CVector& a, const CVector& b) {
  if (a.size() != b.size()) throw InvalidDimension("state vectors differ in length");
  const Complex overlap = b.dot(a);  // <b|a>
  const double magnitude = std::abs(overlap);
  const Complex phase = magnitude > 0.0 ? overlap / magnitude : Complex(1.0);
  return (a - phase * b).norm();
}

double closed_vs_oracle_deviation(std::size_t photons, const JcParameters& params,
                                  std::span<const double> times, std::size_t fock_cutoff) {
  const TruncatedHamiltonian h = build_jc_hamiltonian(params, fock_cutoff);
  const QubitFockState psi0 = initial_state(photons, fock_cutoff);
  double worst = 0.0;
  for (const double t : times) {
    const Evolution closed = evolve_initial(photons, params, t, fock_cutoff);
    const QubitFockState exact = exact_evolve(h, psi0, t);
    worst = std::max(worst, phase_aligned_distance(closed.state.amplitudes(), exact.amplitudes()));
  }
  return worst;
}

double closed_vs_oracle_deviation(std::size_t photons, const JcParameters& params,
                                  std::span<const double> times) {
  return closed_vs_oracle_deviation(photons, params, times, default_fock_cutoff(photons));
}

}  // namespace cpbskew
