#include <gtest/gtest.h>

#include "dirac_step/forces.hpp"
#include "dirac_step/observables.hpp"
#include "frozen_values.hpp"
#include "generators.hpp"

using namespace dirac_step;

TEST(Forces, GoldenExternalForce) {
  const auto sol = match(kinematics({1.0, 4.0, 2.0}), Convention::MainEq6);
  EXPECT_NEAR(external_force_mean(sol), frozen::golden::force, 1e-14);
  const ForceReport rep = force_report(sol);
  EXPECT_NEAR(rep.external_mean, frozen::golden::force, 1e-14);
}

TEST(Forces, NegativeEnergyExternalForce) {
  const auto sol =
      match(kinematics({1.0, 5.0, 2.0}), Convention::NegativeEnergyB5);
  EXPECT_NEAR(external_force_mean(sol), frozen::negative_energy::force, 1e-13);
}

TEST(Forces, BoundaryForceFormula) {
  // -E rho + m (|phi|^2 - |chi|^2)
  EXPECT_DOUBLE_EQ(boundary_force_mean({0.0, 2.0}, 2.0, 1.0), -12.0);
  EXPECT_DOUBLE_EQ(boundary_force_mean({2.0, 0.0}, 2.0, 1.0), -4.0);
  EXPECT_DOUBLE_EQ(boundary_flux({1.0, 1.0}, 3.0, 1.0), -6.0);
}

TEST(Forces, NonrelativisticForms) {
  using namespace std::complex_literals;
  EXPECT_DOUBLE_EQ(nr_boundary_force_dirichlet(2.0i, 0.5), -4.0);
  EXPECT_DOUBLE_EQ(nr_boundary_force_neumann(2.0, -2.0, 1.0), -2.0);
  EXPECT_THROW(nr_boundary_force_dirichlet(1.0, 0.0), std::invalid_argument);
  EXPECT_THROW(nr_boundary_force_neumann(1.0, 1.0, 0.0), std::invalid_argument);
}

TEST(Forces, MasslessReportHasNoNonrelativisticEntry) {
  const auto sol = match(kinematics({0.0, 2.0, 1.0}), Convention::MainEq6);
  EXPECT_TRUE(std::isnan(force_report(sol).nr_boundary_mean));
}

TEST(ForcesProperty, ExternalForceMatchesClosedForm) {
  gen::Rng rng(9);
  for (int i = 0; i < 300; ++i) {
    const PhysicalSetup s = rng.klein();
    const auto sol = match(kinematics(s), Convention::MainEq6);
    const double f = closed_form::force_main(
        s.step_height(), sol.kinematics.a, sol.kinematics.b.real());
    ASSERT_NEAR(external_force_mean(sol), f, 1e-12 * std::abs(f));
  }
}

TEST(ForcesProperty, EvanescentForceIsExactWallValue) {
  // -V0 rho(0) = -4 (E - mc^2) throughout the evanescent zone
  gen::Rng rng(10);
  for (int i = 0; i < 300; ++i) {
    const PhysicalSetup s = rng.evanescent();
    const auto sol = match(kinematics(s), Convention::MainEq6);
    const double wall = -4.0 * (s.energy() - 1.0);
    ASSERT_NEAR(external_force_mean(sol), wall, 1e-11 * std::max(1.0, -wall));
  }
}
