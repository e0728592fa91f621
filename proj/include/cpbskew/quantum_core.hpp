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

#include <complex>
#include <cstddef>

#include <Eigen/Dense>

namespace cpbskew {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

inline constexpr Complex kI{0.0, 1.0};

enum class Level { excited = 0, ground = 1 };

// Pure state of qubit ⊗ truncated Fock space.
//
// Amplitudes are stored qubit-major: (e,0), (e,1), ..., (e,N-1), (g,0), ...,
// (g,N-1). This is the Kronecker ordering qubit ⊗ field, so an operator
// A_q ⊗ B_f acts on it as the plain Kronecker product. The oracle and the
// closed-form propagator both rely on this layout.
class QubitFockState {
 public:
  /// Zero vector on the 2N-dimensional space. Throws InvalidDimension if N = 0.
  explicit QubitFockState(std::size_t fock_cutoff);
  QubitFockState(std::size_t fock_cutoff, CVector amplitudes);

  static QubitFockState basis(std::size_t fock_cutoff, Level level, std::size_t photons);

  static std::size_t index(std::size_t fock_cutoff, Level level, std::size_t photons) {
    return (level == Level::excited ? 0 : fock_cutoff) + photons;
  }

  std::size_t fock_cutoff() const { return cutoff_; }
  std::size_t dim() const { return 2 * cutoff_; }

  Complex amplitude(Level level, std::size_t photons) const;
  Complex& amplitude(Level level, std::size_t photons);

  const CVector& amplitudes() const { return amplitudes_; }
  double norm() const { return amplitudes_.norm(); }

 private:
  std::size_t cutoff_;
  CVector amplitudes_;
};

// Hermitian, unit-trace matrix. Construction checks hermiticity and trace;
// positivity is checked where it matters (psd_sqrt, check_invariants).
class DensityMatrix {
 public:
  explicit DensityMatrix(CMatrix entries);

  std::size_t dim() const { return static_cast<std::size_t>(entries_.rows()); }
  const CMatrix& entries() const { return entries_; }
  Complex operator()(std::size_t i, std::size_t j) const {
    return entries_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  }

  /// Full invariant check including PSD (eigenvalues >= -1e-10).
  bool satisfies_invariants() const;

 private:
  CMatrix entries_;
};

class Observable {
 public:
  /// Throws NotHermitian if max |A - A†| exceeds 1e-12.
  explicit Observable(CMatrix entries);

  std::size_t dim() const { return static_cast<std::size_t>(entries_.rows()); }
  const CMatrix& entries() const { return entries_; }

 private:
  CMatrix entries_;
};

struct Operators {
  CMatrix annihilation;  // a, N x N
  CMatrix creation;      // a†, N x N
  Observable sigma_x;
  Observable sigma_y;
  Observable sigma_z;
  CMatrix identity_field;
  CMatrix identity_qubit;
};

/// Ladder operators on the N-level Fock space plus the Pauli set with
/// sigma_z |e> = +|e>. a† has its top row truncated to zero.
Operators build_operators(std::size_t fock_cutoff);

CMatrix pauli_x();
CMatrix pauli_y();
CMatrix pauli_z();

CMatrix kronecker(const CMatrix& left, const CMatrix& right);
/// op ⊗ I_N on the joint space.
CMatrix embed_qubit(const CMatrix& op, std::size_t fock_cutoff);
/// I_2 ⊗ op on the joint space.
CMatrix embed_field(const CMatrix& op);

DensityMatrix reduced_qubit_state(const QubitFockState& state);
DensityMatrix reduced_field_state(const QubitFockState& state);

/// Principal square root via Hermitian eigendecomposition.
CMatrix psd_sqrt(const DensityMatrix& rho);

double purity(const DensityMatrix& rho);

struct Moments {
  double mean;
  double variance;
};

Moments expectation_and_variance(const DensityMatrix& rho, const Observable& op);
Moments expectation_and_variance(const QubitFockState& state, const Observable& op);

double max_abs(const CMatrix& m);

}  // namespace cpbskew
