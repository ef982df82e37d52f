#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>

#include "dirac_step/spinor.hpp"

namespace dirac_step::ode {

struct StepControl {
  double rtol = 1e-10;
  double atol = 1e-12;
  double initial_step = 0.0;   //!< 0 picks |x1 - x0| / 100
  double min_step_ratio = 1e-14;  //!< relative to |x1 - x0|
  std::size_t max_steps = 50'000'000;
};

struct IntegrationStats {
  std::size_t accepted = 0;
  std::size_t rejected = 0;
  //! Sum of accepted local error estimates (absolute, max norm).
  double error_estimate = 0.0;
};

/*!
 * Dormand-Prince 5(4) for a two-component complex system psi' = f(x, psi).
 *
 * Integrates from x0 to x1 in either direction, overwriting y. The observer is
 * called as observer(x, y) at x0 and after every accepted step. Points in
 * `stops` (ordered along the direction of integration) are hit exactly.
 */
template <class Rhs, class Observer>
IntegrationStats integrate_dp45(Rhs&& rhs, double x0, double x1, Spinor& y,
                                const StepControl& control, Observer&& observer,
                                std::span<const double> stops = {}) {
  // Butcher tableau
  constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
  constexpr double a21 = 1.0 / 5;
  constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
  constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                   a53 = 64448.0 / 6561, a54 = -212.0 / 729;
  constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33,
                   a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                   a65 = -5103.0 / 18656;
  constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                   b5 = -2187.0 / 6784, b6 = 11.0 / 84;
  constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                   e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

  IntegrationStats stats;
  const double span = std::abs(x1 - x0);
  if (span == 0.0) {
    observer(x0, y);
    return stats;
  }
  const double dir = x1 > x0 ? 1.0 : -1.0;
  const double min_step = control.min_step_ratio * span;
  double h = control.initial_step > 0.0 ? control.initial_step : span / 100.0;

  auto err_component = [&](complex err, complex y0, complex y1) {
    const double sc =
        control.atol + control.rtol * std::max(std::abs(y0), std::abs(y1));
    return std::abs(err) / sc;
  };

  std::size_t next_stop = 0;
  auto stop_ahead = [&](double x) {
    while (next_stop < stops.size() && dir * (stops[next_stop] - x) <= 0.0) {
      ++next_stop;
    }
    return next_stop < stops.size() ? stops[next_stop] : x1;
  };

  double x = x0;
  observer(x, y);
  Spinor k1 = rhs(x, y);
  while (dir * (x1 - x) > 0.0) {
    if (stats.accepted + stats.rejected >= control.max_steps) {
      throw std::runtime_error("dp45: step budget exhausted");
    }
    const double target = stop_ahead(x);
    const double h_free = h;
    bool lands = false;
    if (h >= std::abs(target - x)) {
      h = std::abs(target - x);
      lands = true;
    }
    const double hs = dir * h;

    const Spinor k2 = rhs(x + c2 * hs, y + hs * a21 * k1);
    const Spinor k3 = rhs(x + c3 * hs, y + hs * (a31 * k1 + a32 * k2));
    const Spinor k4 =
        rhs(x + c4 * hs, y + hs * (a41 * k1 + a42 * k2 + a43 * k3));
    const Spinor k5 = rhs(
        x + c5 * hs, y + hs * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
    const double x_new = lands ? target : x + hs;
    const Spinor k6 =
        rhs(x + hs, y + hs * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 +
                              a65 * k5));
    const Spinor y_new =
        y + hs * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
    const Spinor k7 = rhs(x_new, y_new);
    const Spinor err =
        hs * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);

    const double eu = err_component(err.upper, y.upper, y_new.upper);
    const double el = err_component(err.lower, y.lower, y_new.lower);
    const double err_norm = std::sqrt(0.5 * (eu * eu + el * el));

    if (err_norm <= 1.0) {
      ++stats.accepted;
      stats.error_estimate += std::max(std::abs(err.upper), std::abs(err.lower));
      x = x_new;
      y = y_new;
      k1 = k7;
      observer(x, y);
      const double grow =
          err_norm == 0.0 ? 5.0
                          : std::clamp(0.9 * std::pow(err_norm, -0.2), 0.2, 5.0);
      h = lands ? std::max(h_free, h * grow) : h * grow;
    } else {
      ++stats.rejected;
      h *= std::max(0.2, 0.9 * std::pow(err_norm, -0.2));
      if (h < min_step) {
        throw std::runtime_error("dp45: step size underflow (non-convergence)");
      }
    }
  }
  return stats;
}

}  // namespace dirac_step::ode
