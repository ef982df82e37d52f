#include "dirac_step/matcher.hpp"

#include <cmath>

namespace dirac_step {

namespace {

struct Coefficients {
  complex r;
  complex t;
};

// [1, a] + r [1, -a] = t u. Eliminating r from the upper row gives
// 2a = t (u_lower + a u_upper).
Coefficients solve_continuity(double a, const Spinor& u) {
  const complex det = u.lower + a * u.upper;
  if (std::abs(det) == 0.0) {
    throw DomainError("singular continuity system");
  }
  const complex t = 2.0 * a / det;
  return {t * u.upper - 1.0, t};
}

PlaneWave main_wave(const Kinematics& kin) {
  const double kbar = kin.kbar_or_kappa;
  switch (kin.regime) {
    case Regime::KleinZone:
      return PlaneWave({1.0, -kin.b}, -kbar, Side::Right);
    case Regime::Transmission:
      return PlaneWave({1.0, kin.b}, kbar, Side::Right);
    case Regime::Evanescent:
      return PlaneWave({1.0, -kin.b}, complex(0.0, kbar), Side::Right);
    default:
      break;
  }
  throw DomainError("no transmitted wave at an edge point");
}

}  // namespace

std::string_view to_string(Convention convention) {
  switch (convention) {
    case Convention::MainEq6: return "MainEq6";
    case Convention::LowerFormA3: return "LowerFormA3";
    case Convention::TraditionalB2: return "TraditionalB2";
    case Convention::NegativeEnergyB5: return "NegativeEnergyB5";
  }
  return "Unknown";
}

std::optional<Convention> parse_convention(std::string_view text) {
  if (text == "main" || text == "MainEq6" || text == "eq6") {
    return Convention::MainEq6;
  }
  if (text == "lower" || text == "a3" || text == "LowerFormA3") {
    return Convention::LowerFormA3;
  }
  if (text == "traditional" || text == "b2" || text == "TraditionalB2") {
    return Convention::TraditionalB2;
  }
  if (text == "b5" || text == "negative-energy" || text == "NegativeEnergyB5") {
    return Convention::NegativeEnergyB5;
  }
  return std::nullopt;
}

PlaneWave transmitted_wave(const Kinematics& kin, Convention convention) {
  switch (convention) {
    case Convention::MainEq6:
      return main_wave(kin);
    case Convention::LowerFormA3: {
      const PlaneWave main = main_wave(kin);
      // upper/lower ratio of the main wave: b'' in the Klein zone
      const complex ratio = kin.regime == Regime::Transmission ? kin.b_prime
                                                              : kin.b_dprime;
      return PlaneWave({ratio, 1.0}, main.wave_number(), Side::Right);
    }
    case Convention::TraditionalB2:
      if (kin.regime == Regime::Evanescent) {
        throw DomainError(
            "the positive-momentum wave grows in the evanescent regime");
      }
      return PlaneWave({1.0, kin.b}, kin.kbar_or_kappa, Side::Right);
    case Convention::NegativeEnergyB5:
      return charge_conjugate(main_wave(kin));
  }
  throw std::invalid_argument("unknown convention");
}

ScatteringSolution match(const Kinematics& kin, Convention convention) {
  const double a = kin.a;
  const double k = kin.k;
  const PlaneWave unit = transmitted_wave(kin, convention);

  Coefficients coeff{};
  if (convention == Convention::MainEq6 && kin.regime == Regime::KleinZone &&
      kin.near_singular()) {
    // [1, -b] = [b'', 1] / b''; solve in the bounded form and rescale.
    const Coefficients lower = solve_continuity(a, {kin.b_dprime, 1.0});
    coeff = {lower.r, lower.t * kin.b_dprime};
  } else {
    coeff = solve_continuity(a, unit.amplitude());
  }

  return ScatteringSolution{
      convention,
      kin,
      PlaneWave({1.0, a}, k, Side::Left),
      PlaneWave(coeff.r * Spinor{1.0, -a}, -k, Side::Left),
      unit.scaled(coeff.t),
      coeff.r,
      coeff.t,
  };
}

Spinor evaluate_left(const ScatteringSolution& sol, double x) {
  return sol.incident.at(x) + sol.reflected.at(x);
}

Spinor evaluate_right(const ScatteringSolution& sol, double x) {
  return sol.transmitted.at(x);
}

Spinor evaluate(const ScatteringSolution& sol, double x) {
  return x <= 0.0 ? evaluate_left(sol, x) : evaluate_right(sol, x);
}

double continuity_residual(const ScatteringSolution& sol) {
  return norm(evaluate_left(sol, 0.0) - evaluate_right(sol, 0.0));
}

}  // namespace dirac_step
