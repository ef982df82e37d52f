#include <gtest/gtest.h>

#include <cmath>

#include "dirac_step/kinematics.hpp"
#include "frozen_values.hpp"
#include "generators.hpp"

using namespace dirac_step;

TEST(Kinematics, GoldenSetup) {
  const Kinematics kin = kinematics({1.0, 4.0, 2.0});
  EXPECT_EQ(kin.regime, Regime::KleinZone);
  EXPECT_NEAR(kin.a, frozen::golden::a, 1e-15);
  EXPECT_NEAR(kin.k, frozen::golden::k, 1e-15);
  EXPECT_NEAR(kin.kbar_or_kappa, frozen::golden::kbar, 1e-15);
  EXPECT_NEAR(kin.b.real(), frozen::golden::b, 1e-15);
  EXPECT_EQ(kin.b.imag(), 0.0);
  EXPECT_NEAR(kin.b_dprime.real(), frozen::golden::b_dprime, 1e-15);
  EXPECT_NEAR(kin.b_prime.real(), -frozen::golden::b_dprime, 1e-15);
  EXPECT_FALSE(kin.near_singular());
}

TEST(Kinematics, MasslessHasUnitRatios) {
  const Kinematics kin = kinematics({0.0, 2.0, 1.0});
  EXPECT_EQ(kin.a, 1.0);
  EXPECT_DOUBLE_EQ(kin.b.real(), -1.0);
  EXPECT_DOUBLE_EQ(kin.k, 1.0);
  EXPECT_DOUBLE_EQ(kin.kbar_or_kappa, 1.0);
}

TEST(Kinematics, NearEdgeUsesStableRatio) {
  const double delta = 1e-6;
  const Kinematics kin = kinematics({1.0, 3.0 + delta, 2.0});
  // V0 = 3 + 1e-6 is not exactly representable; compare at the stored delta
  const double d = (3.0 + delta) - 3.0;
  EXPECT_NEAR(kin.b_dprime.real(), std::sqrt(d / (2.0 + d)), 1e-18);
  EXPECT_NEAR(kin.b_dprime.real(), frozen::near_edge::b_dprime, 1e-12);
}

TEST(Kinematics, EdgesThrow) {
  EXPECT_THROW(kinematics({1.0, 3.0, 2.0}), DomainError);
  EXPECT_THROW(kinematics({1.0, 1.0, 2.0}), DomainError);
}

TEST(Kinematics, EvanescentRatioIsImaginary) {
  const Kinematics kin = kinematics({1.0, 2.0, 2.0});
  EXPECT_EQ(kin.regime, Regime::Evanescent);
  EXPECT_EQ(kin.b.real(), 0.0);
  EXPECT_LT(kin.b.imag(), 0.0);
  // kappa^2 = mc^4 - (E - V0)^2
  EXPECT_NEAR(kin.kbar_or_kappa, 1.0, 1e-15);
}

TEST(Kinematics, TransmissionRatioIsPositive) {
  const Kinematics kin = kinematics({1.0, 0.5, 3.0});
  EXPECT_EQ(kin.regime, Regime::Transmission);
  const double w = 2.5;
  EXPECT_NEAR(kin.b.real(), std::sqrt((w - 1.0) / (w + 1.0)), 1e-15);
  EXPECT_NEAR(kin.kbar_or_kappa, std::sqrt(w * w - 1.0), 1e-15);
}

TEST(Kinematics, HbarCScalesWaveNumbers) {
  const Kinematics kin = kinematics({1.0, 4.0, 2.0, 0.5});
  EXPECT_NEAR(kin.k, 2.0 * frozen::golden::k, 1e-14);
  EXPECT_NEAR(kin.kbar_or_kappa, 2.0 * frozen::golden::kbar, 1e-14);
}

TEST(KinematicsProperty, KleinRatiosSatisfyDispersion) {
  gen::Rng rng(11);
  for (int i = 0; i < 500; ++i) {
    const PhysicalSetup s = rng.klein();
    const Kinematics kin = kinematics(s);
    const double e = s.energy(), m = s.mass_energy(), w = e - s.step_height();
    ASSERT_NEAR(kin.k * kin.k, e * e - m * m, 1e-12 * e * e);
    ASSERT_NEAR(kin.kbar_or_kappa * kin.kbar_or_kappa, w * w - m * m,
                1e-12 * w * w);
    ASSERT_LT(kin.b.real(), -1.0);
    ASSERT_NEAR(kin.b.real() * kin.b_dprime.real(), -1.0, 1e-14);
    ASSERT_GT(kin.a, 0.0);
    ASSERT_LT(kin.a, 1.0);
  }
}
