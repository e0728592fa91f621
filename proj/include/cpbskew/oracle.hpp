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

#pragma once

#include <cstddef>
#include <span>

#include "cpbskew/propagator.hpp"
#include "cpbskew/quantum_core.hpp"

namespace cpbskew {

// Hermitian Hamiltonian on the truncated qubit ⊗ Fock space together with its
// eigendecomposition, computed once at construction.
class TruncatedHamiltonian {
 public:
  /// Throws NotHermitian when max |H - H^H| > 1e-12 and InvalidDimension when
  /// the matrix is not 2N x 2N.
  TruncatedHamiltonian(CMatrix matrix, std::size_t fock_cutoff, JcParameters params);

  const CMatrix& matrix() const { return matrix_; }
  std::size_t fock_cutoff() const { return cutoff_; }
  const JcParameters& params() const { return params_; }
  const Eigen::VectorXd& eigenvalues() const { return eigenvalues_; }
  const CMatrix& eigenvectors() const { return eigenvectors_; }

 private:
  CMatrix matrix_;
  std::size_t cutoff_;
  JcParameters params_;
  Eigen::VectorXd eigenvalues_;
  CMatrix eigenvectors_;
};

/// H = Omega (Delta sigma_z + sigma_+ a + sigma_- a^dagger), assembled from
/// the ladder and Pauli operators. Requires N >= 2.
TruncatedHamiltonian build_jc_hamiltonian(const JcParameters& params, std::size_t fock_cutoff);

/// exp(-i H T) psi0 through the eigenbasis of H. T = 0 returns psi0 unchanged.
QubitFockState exact_evolve(const TruncatedHamiltonian& hamiltonian, const QubitFockState& psi0,
                            double time);

/// || a - e^{i phi} b || minimised over the global phase phi.
double phase_aligned_distance(const CVector& a, const CVector& b);

/// Largest phase-aligned distance between the closed-form evolution of
/// (|e,n> + |g,n>)/sqrt(2) and the eigendecomposition oracle over `times`.
double closed_vs_oracle_deviation(std::size_t photons, const JcParameters& params,
                                  std::span<const double> times, std::size_t fock_cutoff);
double closed_vs_oracle_deviation(std::size_t photons, const JcParameters& params,
                                  std::span<const double> times);

}  // namespace cpbskew
