#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "dirac_step/observables.hpp"
#include "dirac_step/oracle.hpp"
#include "frozen_values.hpp"
#include "generators.hpp"

using namespace dirac_step;

namespace {

OracleOptions tight() {
  OracleOptions o;
  o.tolerance = 1e-12;
  return o;
}

double closed_R(const PhysicalSetup& s, Convention c = Convention::MainEq6) {
  return coefficients(match(kinematics(s), c)).R;
}

}  // namespace

TEST(SmoothStep, Profile) {
  const SmoothStep step{4.0, 0.1};
  EXPECT_DOUBLE_EQ(step(0.0), 2.0);
  EXPECT_NEAR(step(5.0), 4.0, 1e-15);
  EXPECT_NEAR(step(-5.0), 0.0, 1e-15);
}

TEST(Oracle, ConservationWithinTenTimesToleranceOnShortDomain) {
  const PhysicalSetup s(1.0, 4.0, 2.0);
  const auto res = integrate_scattering(s, {4.0, 1e-3}, Convention::MainEq6);
  EXPECT_LT(std::abs(res.R_num + res.T_num - 1.0), 1e-9);
  EXPECT_LT(res.max_current_drift, 1e-9);
}

TEST(Oracle, GoldenSetupNarrowStep) {
  const PhysicalSetup s(1.0, 4.0, 2.0);
  const auto res = integrate_scattering(s, {4.0, 1e-4}, Convention::MainEq6,
                                        tight());
  EXPECT_NEAR(res.R_num, frozen::golden::R, 1e-7);
  EXPECT_NEAR(res.T_num, frozen::golden::T, 1e-7);
  EXPECT_NEAR(res.R_num + res.T_num, 1.0, 1e-10);
  EXPECT_LT(res.max_current_drift, 1e-10);
}

TEST(Oracle, WidthErrorScalesQuadratically) {
  // The smooth step deviates from the sharp one at O(w^2)
  const PhysicalSetup s(1.0, 4.0, 2.0);
  const double widths[] = {1e-2, 1e-3, 1e-4};
  const auto rows = sharp_limit_study(s, Convention::MainEq6, widths, tight());
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_NEAR(rows[0].error / rows[1].error, 100.0, 2.0);
  EXPECT_NEAR(rows[1].error / rows[2].error, 100.0, 2.0);
  // error ~ (pi^2 / 4) w^2
  EXPECT_NEAR(rows[1].error / (M_PI * M_PI / 4.0 * 1e-6), 1.0, 1e-3);
}

TEST(Oracle, TraditionalBoundaryConditionGivesParadox) {
  const PhysicalSetup s(1.0, 4.0, 2.0);
  const auto res = integrate_scattering(s, {4.0, 1e-4},
                                        Convention::TraditionalB2, tight());
  EXPECT_NEAR(res.R_num, 4.0, 1e-6);
  EXPECT_NEAR(res.T_num, -3.0, 1e-6);
  // R_num = 4 - 4 pi^2 w^2 + ..., so w = 1e-3 sits about 4e-5 below 4
  const auto wide = integrate_scattering(s, {4.0, 1e-3},
                                         Convention::TraditionalB2, tight());
  EXPECT_NEAR((4.0 - wide.R_num) / (4.0 * M_PI * M_PI * 1e-6), 1.0, 1e-3);
}

TEST(Oracle, EvanescentAndTransmissionZones) {
  const PhysicalSetup ev(1.0, 2.0, 2.0);
  const auto r1 = integrate_scattering(ev, {2.0, 1e-3}, Convention::MainEq6,
                                       tight());
  EXPECT_NEAR(r1.R_num, 1.0, 1e-8);
  const PhysicalSetup tr(1.0, 0.5, 3.0);
  const auto r2 = integrate_scattering(tr, {0.5, 1e-4}, Convention::MainEq6,
                                       tight());
  EXPECT_NEAR(r2.R_num, closed_R(tr), 1e-7);
}

TEST(Oracle, RejectsInvalidRequests) {
  const PhysicalSetup s(1.0, 4.0, 2.0);
  EXPECT_THROW(integrate_scattering(s, {4.0, 0.0}, Convention::MainEq6),
               std::invalid_argument);
  EXPECT_THROW(integrate_scattering(s, {5.0, 1e-3}, Convention::MainEq6),
               std::invalid_argument);
  EXPECT_THROW(integrate_scattering(s, {4.0, 1e-3}, Convention::NegativeEnergyB5),
               std::invalid_argument);
  OracleOptions loose;
  loose.tolerance = 1e-3;
  EXPECT_THROW(integrate_scattering(s, {4.0, 1e-3}, Convention::MainEq6, loose),
               std::invalid_argument);
  OracleOptions small;
  small.domain_half_width = 0.1;
  EXPECT_THROW(integrate_scattering(s, {4.0, 1e-3}, Convention::MainEq6, small),
               std::invalid_argument);
}

TEST(Oracle, WavefunctionMatchesClosedFormAwayFromStep) {
  const PhysicalSetup s(1.0, 4.0, 2.0);
  const std::vector<double> xs = {-3.0, -1.0, 1.0, 3.0};
  const auto psi = oracle_wavefunction(s, {4.0, 1e-4}, Convention::MainEq6, xs,
                                       tight());
  const auto sol = match(kinematics(s), Convention::MainEq6);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const Spinor exact = evaluate(sol, xs[i]);
    EXPECT_LT(std::abs(psi[i].upper - exact.upper), 1e-6) << xs[i];
    EXPECT_LT(std::abs(psi[i].lower - exact.lower), 1e-6) << xs[i];
  }
}

TEST(OracleProperty, RandomKleinSetupsAtNarrowWidth) {
  gen::Rng rng(41);
  for (int i = 0; i < 20; ++i) {
    PhysicalSetup s = rng.klein();
    // keep away from the edge so the domain stays short
    if (s.step_height() < 1.05 * (s.energy() + 1.0)) {
      s = s.with_step_height(1.05 * (s.energy() + 1.0));
    }
    const auto res = integrate_scattering(s, {s.step_height(), 1e-4},
                                          Convention::MainEq6, tight());
    ASSERT_LT(std::abs(res.R_num - closed_R(s)), 1e-6)
        << "E=" << s.energy() << " V0=" << s.step_height();
    ASSERT_LT(res.max_current_drift, 1e-9);
  }
}

TEST(SharpLimit, ErrorDecreasesWithWidth) {
  const PhysicalSetup s(1.0, 4.0, 2.0);
  const double widths[] = {0.1, 0.01, 0.001};
  const auto rows = sharp_limit_study(s, Convention::MainEq6, widths);
  EXPECT_GT(rows[0].error, rows[1].error);
  EXPECT_GT(rows[1].error, rows[2].error);
  for (const auto& row : rows) EXPECT_NEAR(row.R_closed, 0.25, 1e-15);
}

TEST(SharpLimit, EvanescentReflectionIsTotalForAnyWidth) {
  const PhysicalSetup s(1.0, 2.5, 2.0);
  const double widths[] = {0.1, 0.01, 0.001};
  for (const auto& row : sharp_limit_study(s, Convention::MainEq6, widths)) {
    EXPECT_LT(std::abs(row.R_num - 1.0), 1e-8) << row.width;
  }
}

TEST(OracleProperty, OutgoingConditionNeverAmplifies) {
  gen::Rng rng(43);
  for (int i = 0; i < 10; ++i) {
    PhysicalSetup s = rng.klein();
    s = s.with_step_height(std::max(s.step_height(), 1.05 * (s.energy() + 1.0)));
    const auto main = integrate_scattering(s, {s.step_height(), 1e-3},
                                           Convention::MainEq6, tight());
    ASSERT_LE(std::abs(main.r_num), 1.0);
    ASSERT_NEAR(main.R_num + main.T_num, 1.0, 1e-9);
    const auto trad = integrate_scattering(s, {s.step_height(), 1e-3},
                                           Convention::TraditionalB2);
    ASSERT_GT(trad.R_num, 1.0);
  }
}
