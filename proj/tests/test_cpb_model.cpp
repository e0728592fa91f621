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

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "cpbskew/cpb_model.hpp"
#include "cpbskew/error.hpp"

using namespace cpbskew;

namespace {

CpbParameters circuit(double ec, double ej, double ng) {
  return CpbParameters{ec, ej, ng, 0.25, 1.0, 1.0, 0.0, 1.0};
}

}  // namespace

TEST(TransitionFrequency, Examples) {
  EXPECT_DOUBLE_EQ(transition_frequency(circuit(2.0, 0.3, 0.5)), 0.3);
  EXPECT_DOUBLE_EQ(transition_frequency(circuit(2.0, 0.0, 0.8)), 4.0 * 2.0 * std::abs(0.6));
  EXPECT_NEAR(transition_frequency(circuit(1.0, 1.0, 0.75)), std::sqrt(5.0), 1e-15);
}

TEST(TransitionFrequency, EvenInGateBias) {
  for (double ng = -1.0; ng <= 2.0; ng += 0.0625) {
    EXPECT_EQ(transition_frequency(circuit(1.3, 0.2, ng)),
              transition_frequency(circuit(1.3, 0.2, 1.0 - ng)));
    EXPECT_GE(transition_frequency(circuit(1.3, 0.2, ng)), 0.2);
  }
}

TEST(MixingAngle, Examples) {
  EXPECT_DOUBLE_EQ(mixing_angle(circuit(1.0, 0.0, 0.8)), 0.0);
  EXPECT_DOUBLE_EQ(mixing_angle(circuit(1.0, 0.4, 0.5)), -std::numbers::pi / 2);
  EXPECT_NEAR(mixing_angle(circuit(1.0, 1.0, 1.0)), -std::numbers::pi / 4, 1e-15);
}

TEST(MixingAngle, OddInGateBiasAndBounded) {
  for (double x = 0.01; x < 1.0; x += 0.07) {
    const double up = mixing_angle(circuit(1.0, 0.3, 0.5 + x));
    const double down = mixing_angle(circuit(1.0, 0.3, 0.5 - x));
    EXPECT_NEAR(up, -down, 1e-15);
    EXPECT_LT(std::abs(up), std::numbers::pi / 2);
  }
}

TEST(EffectiveRabi, Examples) {
  EXPECT_DOUBLE_EQ(effective_rabi(1.0), 0.5);
  EXPECT_NEAR(effective_rabi(0.25), 0.4, 1e-15);
  EXPECT_NEAR(effective_rabi(0.125), 0.3142696805273545, 1e-15);
}

TEST(EffectiveRabi, UniqueMaximumAtUnity) {
  double best = 0.0;
  double best_gamma = 0.0;
  for (int i = 1; i <= 20000; ++i) {
    const double gamma = 0.001 * i;
    const double omega = effective_rabi(gamma);
    EXPECT_GT(omega, 0.0);
    EXPECT_LE(omega, 0.5);
    if (omega > best) {
      best = omega;
      best_gamma = gamma;
    }
  }
  EXPECT_DOUBLE_EQ(best_gamma, 1.0);
  EXPECT_DOUBLE_EQ(best, 0.5);
  // Increasing on (0, 1], decreasing beyond.
  EXPECT_LT(effective_rabi(0.125), effective_rabi(1.0 / 6.0));
  EXPECT_LT(effective_rabi(1.0 / 6.0), effective_rabi(0.25));
  EXPECT_GT(effective_rabi(4.0), effective_rabi(6.0));
}

TEST(EffectiveRabi, InvariantUnderInversion) {
  for (double gamma : {0.125, 1.0 / 6.0, 0.25, 0.7, 3.0}) {
    EXPECT_NEAR(effective_rabi(gamma), effective_rabi(1.0 / gamma), 1e-15);
  }
}

TEST(EffectiveRabi, RejectsNonPositive) {
  EXPECT_THROW(effective_rabi(0.0), InvalidArgument);
  EXPECT_THROW(effective_rabi(-1.0), InvalidArgument);
}

TEST(ScaledDetuning, Examples) {
  EXPECT_DOUBLE_EQ(scaled_detuning(0.0, 1.0), 0.0);
  EXPECT_DOUBLE_EQ(scaled_detuning(0.6, 1.0), 0.3);
  EXPECT_DOUBLE_EQ(scaled_detuning(-0.6, 1.0), -0.3);
  EXPECT_THROW(scaled_detuning(0.6, 0.0), InvalidArgument);
}

TEST(Derive, CollectsEffectiveQuantitiesAndWarnings) {
  CpbParameters p{1.0, 0.05, 0.75, 1.0, 4.0, 5.0, 0.6, 1.0};
  const auto eff = derive(p);
  EXPECT_DOUBLE_EQ(eff.capacitance_ratio, 0.25);
  EXPECT_NEAR(eff.rabi, 0.4, 1e-15);
  EXPECT_DOUBLE_EQ(eff.scaled_detuning, 0.3);
  EXPECT_DOUBLE_EQ(eff.mu, 0.25);
  EXPECT_TRUE(eff.warnings.empty());

  p.josephson_energy = 0.8;
  EXPECT_EQ(derive(p).warnings.size(), 1u);

  p.charging_energy = 0.0;
  EXPECT_THROW(derive(p), InvalidArgument);
}
