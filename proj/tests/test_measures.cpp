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

#include <algorithm>
#include <cmath>
#include <random>

#include <Eigen/Eigenvalues>
#include <gtest/gtest.h>

#include "cpbskew/cpb_model.hpp"
#include "cpbskew/error.hpp"
#include "cpbskew/measures.hpp"
#include "cpbskew/propagator.hpp"
#include "test_support.hpp"

using namespace cpbskew;
using cpbskew::testing::diag2;
using cpbskew::testing::projector;
using cpbskew::testing::random_density;
using cpbskew::testing::random_state;

namespace {

CVector bell() {
  CVector v = CVector::Zero(4);
  v(0) = 1.0 / std::sqrt(2.0);
  v(3) = 1.0 / std::sqrt(2.0);
  return v;
}

// Wootters via the eigenvalues of the non-Hermitian R = rho Y rho* Y.
double wootters_by_eigenvalues(const CMatrix& rho) {
  CMatrix y = CMatrix::Zero(4, 4);
  y(0, 3) = -1.0;
  y(1, 2) = 1.0;
  y(2, 1) = 1.0;
  y(3, 0) = -1.0;
  const CMatrix r = rho * y * rho.conjugate() * y;
  Eigen::ComplexEigenSolver<CMatrix> solver(r);
  std::vector<double> roots;
  for (const auto& ev : solver.eigenvalues()) roots.push_back(std::sqrt(std::max(0.0, ev.real())));
  std::sort(roots.rbegin(), roots.rend());
  return std::max(0.0, roots[0] - roots[1] - roots[2] - roots[3]);
}

QubitFockState evolved(std::size_t n, double delta, double gamma, double t) {
  return evolve_initial(n, {delta, effective_rabi(gamma)}, t).state;
}

}  // namespace

TEST(SkewInformation, PureStateIsVariance) {
  const DensityMatrix plus(CMatrix::Constant(2, 2, 0.5));
  EXPECT_NEAR(skew_information(plus, Observable(pauli_z())), 1.0, 1e-15);
}

TEST(SkewInformation, MaximallyMixedIsZero) {
  EXPECT_NEAR(skew_information(DensityMatrix(diag2(0.5, 0.5)), Observable(pauli_z())), 0.0,
              1e-15);
}

TEST(SkewInformation, DiagonalMixedAgainstSigmaX) {
  // 1 - 2 sqrt(p (1 - p)) at p = 1/4.
  const double value = skew_information(DensityMatrix(diag2(0.25, 0.75)), Observable(pauli_x()));
  EXPECT_NEAR(value, 0.1339745962155614, 1e-14);
}

TEST(SkewInformation, CommutatorAndTraceFormsAgree) {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t dim = 2 + trial % 6;
    const auto rho = random_density(rng, dim);
    const auto g = random_density(rng, dim);  // any Hermitian works as an observable
    const Observable h(g.entries() * 3.0);
    EXPECT_NEAR(skew_information(rho, h), skew_information_commutator(rho, h), 1e-12);
  }
}

TEST(SkewInformation, EqualsVarianceOnPureStates) {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t dim = 2 + trial % 8;
    const auto rho = projector(cpbskew::testing::random_vector(rng, dim));
    const Observable h(random_density(rng, dim).entries() * 2.0);
    EXPECT_NEAR(skew_information(rho, h), expectation_and_variance(rho, h).variance, 1e-10);
  }
}

TEST(SkewInformation, ZeroForSimultaneouslyDiagonal) {
  std::mt19937_64 rng(61);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t dim = 2 + trial % 6;
    CMatrix rho = CMatrix::Zero(dim, dim);
    CMatrix h = CMatrix::Zero(dim, dim);
    double total = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
      rho(i, i) = u(rng);
      total += rho(i, i).real();
      h(i, i) = 4.0 * u(rng) - 2.0;
    }
    rho /= total;
    EXPECT_NEAR(skew_information(DensityMatrix(rho), Observable(h)), 0.0, 1e-10);
  }
}

TEST(SkewInformation, ConvexInState) {
  std::mt19937_64 rng(67);
  std::uniform_real_distribution<double> weight(0.0, 1.0);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t dim = 2 + trial % 5;
    const auto a = random_density(rng, dim);
    const auto b = random_density(rng, dim);
    const Observable h(random_density(rng, dim).entries() * 5.0);
    const double lambda = weight(rng);
    const DensityMatrix mix(lambda * a.entries() + (1.0 - lambda) * b.entries());
    EXPECT_LE(skew_information(mix, h),
              lambda * skew_information(a, h) + (1.0 - lambda) * skew_information(b, h) + 1e-10);
  }
}

TEST(SkewInformation, Errors) {
  EXPECT_THROW(skew_information(DensityMatrix(diag2(0.5, 0.5)), Observable(CMatrix::Identity(3, 3))),
               InvalidDimension);
  EXPECT_THROW(skew_information(DensityMatrix(diag2(1.0 + 1e-6, -1e-6)), Observable(pauli_x())),
               NotPositiveSemidefinite);
}

TEST(ConcurrencePure, Examples) {
  const auto product = initial_state(3, 6);
  EXPECT_EQ(concurrence_pure(product), 0.0);
  QubitFockState entangled(3);
  entangled.amplitude(Level::excited, 0) = 1.0 / std::sqrt(2.0);
  entangled.amplitude(Level::ground, 1) = 1.0 / std::sqrt(2.0);
  EXPECT_NEAR(concurrence_pure(entangled), 1.0, 1e-15);
  QubitFockState bad(3);
  bad.amplitude(Level::excited, 0) = 0.5;
  EXPECT_THROW(concurrence_pure(bad), NotNormalized);
}

TEST(ConcurrencePure, ReferenceMaximumAgreesWithPurityRoute) {
  const auto state = evolved(1, 0.0, 0.25, 7.0);
  const double c = concurrence_pure(state);
  EXPECT_GT(c, 0.0);
  EXPECT_LE(c, 1.0);
  EXPECT_NEAR(c, std::sqrt(2.0 * (1.0 - purity(reduced_qubit_state(state)))), 1e-10);
}

TEST(ConcurrencePure, ZeroExactlyOnProducts) {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + trial % 7;
    CVector q = cpbskew::testing::random_vector(rng, 2).normalized();
    CVector f = cpbskew::testing::random_vector(rng, n).normalized();
    CVector joint(2 * n);
    joint << q(0) * f, q(1) * f;
    EXPECT_NEAR(concurrence_pure(QubitFockState(n, joint)), 0.0, 1e-7);
    EXPECT_NEAR(concurrence_squared_pure(QubitFockState(n, joint)), 0.0, 1e-14);
  }
}

TEST(ConcurrenceWootters, Examples) {
  EXPECT_NEAR(concurrence_wootters(projector(bell())), 1.0, 1e-14);
  CVector product(4);
  product << 0.6, 0.0, 0.8, 0.0;  // (0.6|0> + 0.8|1>) ⊗ |0>
  EXPECT_NEAR(concurrence_wootters(projector(product)), 0.0, 1e-14);
  EXPECT_THROW(concurrence_wootters(DensityMatrix(diag2(0.5, 0.5))), InvalidDimension);
}

TEST(ConcurrenceWootters, WernerFamily) {
  for (double p = 0.0; p <= 1.0; p += 0.05) {
    const CMatrix bell_rho = bell() * bell().adjoint();
    const CMatrix rho = p * bell_rho + (1.0 - p) / 4.0 * CMatrix::Identity(4, 4);
    const double expected = wootters_by_eigenvalues(rho);
    EXPECT_NEAR(concurrence_wootters(DensityMatrix(rho)), expected, 1e-10) << "p=" << p;
    EXPECT_NEAR(expected, std::max(0.0, (3.0 * p - 1.0) / 2.0), 1e-10) << "p=" << p;
  }
  const CMatrix half = 0.5 * bell() * bell().adjoint() + 0.125 * CMatrix::Identity(4, 4);
  EXPECT_NEAR(concurrence_wootters(DensityMatrix(half)), 0.25, 1e-12);
}

TEST(ConcurrenceWootters, RandomMixedStatesMatchEigenvalueRoute) {
  std::mt19937_64 rng(73);
  for (int trial = 0; trial < 300; ++trial) {
    const auto rho = random_density(rng, 4);
    EXPECT_NEAR(concurrence_wootters(rho), wootters_by_eigenvalues(rho.entries()), 1e-8);
  }
}

TEST(ConcurrenceWootters, VacuumTrajectoryMatchesPureRoute) {
  for (const double delta : {0.0, 0.3, 0.9}) {
    for (double t = 0.0; t <= 25.0; t += 0.05) {
      const auto state = evolved(0, delta, 0.25, t);
      const auto rho4 = two_level_joint_density(state, 0);
      EXPECT_NEAR(concurrence_wootters(rho4), concurrence_pure(state), 1e-10)
          << "Delta=" << delta << " T=" << t;
    }
  }
}

TEST(TwoLevelJointDensity, RejectsLeakage) {
  const auto state = evolved(2, 0.0, 0.25, 3.0);
  EXPECT_THROW(two_level_joint_density(state, 0), InvalidDimension);
  EXPECT_THROW(two_level_joint_density(state, 10), InvalidDimension);
}

TEST(SkewFromConcurrence, Examples) {
  EXPECT_EQ(skew_from_concurrence(0.0), 1.0);
  EXPECT_EQ(skew_from_concurrence(1.0), 2.0);
  EXPECT_NEAR(skew_from_concurrence(0.6), 1.36, 1e-15);
  EXPECT_THROW(skew_from_concurrence(1.1), InvalidArgument);
  EXPECT_THROW(skew_from_concurrence(-0.1), InvalidArgument);
}

TEST(VarianceSum, Examples) {
  EXPECT_NEAR(variance_sum_qubit(initial_state(2, 5)), 2.0, 1e-14);
  QubitFockState entangled(3);
  entangled.amplitude(Level::excited, 0) = 1.0 / std::sqrt(2.0);
  entangled.amplitude(Level::ground, 1) = 1.0 / std::sqrt(2.0);
  EXPECT_NEAR(variance_sum_qubit(entangled), 3.0, 1e-14);
}

TEST(Diagnostics, Examples) {
  const auto product = diagnostics(initial_state(1, 4));
  EXPECT_NEAR(product.purity, 1.0, 1e-15);
  EXPECT_NEAR(product.entropy, 0.0, 1e-12);
  QubitFockState entangled(3);
  entangled.amplitude(Level::excited, 0) = 1.0 / std::sqrt(2.0);
  entangled.amplitude(Level::ground, 1) = 1.0 / std::sqrt(2.0);
  const auto d = diagnostics(entangled);
  EXPECT_NEAR(d.purity, 0.5, 1e-15);
  EXPECT_NEAR(d.entropy, 1.0, 1e-14);
  const auto f = field_diagnostics(entangled);
  EXPECT_NEAR(f.purity, 0.5, 1e-15);
  EXPECT_NEAR(f.entropy, 1.0, 1e-14);
}

// Identities on evolved states: C^2 = 2(1 - P), variance sum = 2 + C^2,
// 0 <= WY sum <= variance sum, S_I in [1, 2] with 2 only at P = 1/2.
TEST(MeasureReport, IdentitiesOnEvolvedStates) {
  std::mt19937_64 rng(79);
  std::uniform_real_distribution<double> delta(0.0, 2.0), gamma(0.05, 20.0), time(0.0, 50.0);
  std::uniform_int_distribution<std::size_t> photons(0, 10);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto state = evolved(photons(rng), delta(rng), gamma(rng), time(rng));
    const MeasureReport m = measure(state);
    const double c2 = m.concurrence * m.concurrence;
    EXPECT_NEAR(c2, 2.0 * (1.0 - m.purity_qubit), 1e-10);
    EXPECT_NEAR(m.variance_sum_qubit, 2.0 + c2, 1e-10);
    EXPECT_NEAR(variance_sum_qubit(state), m.variance_sum_qubit, 1e-12);
    EXPECT_GE(m.wy_sum_qubit, 0.0);
    EXPECT_LE(m.wy_sum_qubit, m.variance_sum_qubit + 1e-10);
    EXPECT_GE(m.skew, 1.0);
    EXPECT_LE(m.skew, 2.0);
    EXPECT_NEAR(m.skew, skew_from_concurrence(m.concurrence), 1e-12);
    if (m.skew > 2.0 - 1e-14) EXPECT_NEAR(m.purity_qubit, 0.5, 1e-10);
    EXPECT_GE(m.purity_qubit, 0.5 - 1e-12);
    EXPECT_LE(m.purity_qubit, 1.0 + 1e-12);
  }
}

TEST(MeasureReport, InitialStateIsExactlyUnentangled) {
  for (std::size_t n = 0; n < 10; ++n) {
    const MeasureReport m = measure(evolved(n, 0.3, 0.25, 0.0));
    EXPECT_EQ(m.skew, 1.0);
    EXPECT_EQ(m.concurrence, 0.0);
  }
}

TEST(MeasureReport, WySumMatchesVarianceSumOnPureReducedState) {
  const auto state = initial_state(2, 5);
  const MeasureReport m = measure(state);
  EXPECT_NEAR(m.wy_sum_qubit, m.variance_sum_qubit, 1e-10);
}
