#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "dirac_step/ode.hpp"

using namespace dirac_step;
using namespace std::complex_literals;

namespace {

// Free Dirac system at E with V = 0, in the form integrated by the oracle.
struct FreeDirac {
  double e, m;
  Spinor operator()(double, const Spinor& y) const {
    return {1.0i * (e + m) * y.lower, 1.0i * (e - m) * y.upper};
  }
};

}  // namespace

TEST(Dp45, ReproducesPlaneWave) {
  const double e = 2.0, m = 1.0, k = std::sqrt(3.0), a = k / (e + m);
  Spinor y{1.0, a};
  ode::StepControl control;
  control.rtol = 1e-12;
  control.atol = 1e-14;
  const auto stats = ode::integrate_dp45(FreeDirac{e, m}, 0.0, 10.0, y, control,
                                         [](double, const Spinor&) {});
  const complex phase = std::exp(1.0i * k * 10.0);
  EXPECT_LT(std::abs(y.upper - phase), 1e-9);
  EXPECT_LT(std::abs(y.lower - a * phase), 1e-9);
  EXPECT_GT(stats.accepted, 10u);
}

TEST(Dp45, IntegratesBackwards) {
  const double e = 2.0, m = 1.0, k = std::sqrt(3.0), a = k / (e + m);
  Spinor y{1.0, -a};  // e^{-ikx}
  ode::StepControl control;
  control.rtol = 1e-12;
  control.atol = 1e-14;
  ode::integrate_dp45(FreeDirac{e, m}, 0.0, -7.0, y, control,
                      [](double, const Spinor&) {});
  const complex phase = std::exp(-1.0i * k * -7.0);
  EXPECT_LT(std::abs(y.upper - phase), 1e-9);
  EXPECT_LT(std::abs(y.lower + a * phase), 1e-9);
}

TEST(Dp45, LandsOnStops) {
  Spinor y{1.0, 0.5};
  const std::vector<double> stops = {-1.0, -2.5, -2.75};
  std::vector<double> seen;
  ode::integrate_dp45(
      FreeDirac{2.0, 1.0}, 0.0, -3.0, y, ode::StepControl{},
      [&](double x, const Spinor&) {
        for (double s : stops) {
          if (x == s) seen.push_back(x);
        }
      },
      stops);
  EXPECT_EQ(seen, stops);
}

TEST(Dp45, ErrorShrinksWithTolerance) {
  const double e = 2.0, m = 1.0, k = std::sqrt(3.0), a = k / (e + m);
  double previous = 1.0;
  for (double tol : {1e-6, 1e-8, 1e-10}) {
    Spinor y{1.0, a};
    ode::StepControl control;
    control.rtol = tol;
    control.atol = tol * 1e-2;
    ode::integrate_dp45(FreeDirac{e, m}, 0.0, 20.0, y, control,
                        [](double, const Spinor&) {});
    const double err = std::abs(y.upper - std::exp(1.0i * k * 20.0));
    EXPECT_LT(err, previous);
    previous = err;
  }
}

TEST(Dp45, ThrowsWhenBudgetExhausted) {
  Spinor y{1.0, 0.5};
  ode::StepControl control;
  control.max_steps = 3;
  EXPECT_THROW(ode::integrate_dp45(FreeDirac{2.0, 1.0}, 0.0, 100.0, y, control,
                                   [](double, const Spinor&) {}),
               std::runtime_error);
}
