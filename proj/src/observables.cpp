#include "dirac_step/observables.hpp"

#include <cmath>

namespace dirac_step {

ObservableSet coefficients(const ScatteringSolution& sol) {
  const double j_i = current(sol.incident.amplitude());
  const double j_r = current(sol.reflected.amplitude());
  const double j_t = current(sol.transmitted.amplitude());
  const bool evanescent = sol.kinematics.regime == Regime::Evanescent;

  const DensityCurrent origin = density_current_at_origin(sol);
  std::optional<double> v_t;
  if (!evanescent) v_t = j_t / density(sol.transmitted.amplitude());

  return ObservableSet{
      std::abs(j_r) / std::abs(j_i),
      evanescent ? 0.0 : j_t / j_i,
      origin.rho,
      origin.j,
      v_t,
      j_i,
      j_r,
      evanescent ? 0.0 : j_t,
  };
}

DensityCurrent density_current_at_origin(const ScatteringSolution& sol) {
  const Spinor psi0 = evaluate_right(sol, 0.0);
  return {density(psi0), current(psi0)};
}

double transmitted_velocity(const ScatteringSolution& sol) {
  if (sol.kinematics.regime == Regime::Evanescent) {
    throw DomainError("no transmitted velocity for a decaying wave");
  }
  const Spinor& amp = sol.transmitted.amplitude();
  return current(amp) / density(amp);
}

namespace closed_form {

double reflection_main(double a, double b) {
  const double r = (a + b) / (a - b);
  return r * r;
}
double transmission_main(double a, double b) {
  return 4.0 * a * std::abs(b) / ((a - b) * (a - b));
}
double rho0_main(double a, double b) {
  return 4.0 * a * a * (1.0 + b * b) / ((a - b) * (a - b));
}
double j0_main(double a, double b) {
  return -8.0 * a * a * b / ((a - b) * (a - b));
}
double velocity_main(double b) { return -2.0 * b / (1.0 + b * b); }
double velocity_from_energies(double energy, double step_height,
                              double mass_energy) {
  const double ratio = mass_energy / (energy - step_height);
  return std::sqrt(1.0 - ratio * ratio);
}
double force_main(double step_height, double a, double b) {
  return -step_height * rho0_main(a, b);
}

double r_lower(double a, double b_dprime) {
  return (a * b_dprime - 1.0) / (a * b_dprime + 1.0);
}
double t_lower(double a, double b_dprime) {
  return 2.0 * a / (1.0 + a * b_dprime);
}
double reflection_lower(double a, double b_dprime) {
  const double r = r_lower(a, b_dprime);
  return r * r;
}
double transmission_lower(double a, double b_dprime) {
  const double d = 1.0 + a * b_dprime;
  return 4.0 * a * b_dprime / (d * d);
}
double rho0_lower(double a, double b_dprime) {
  const double d = 1.0 + a * b_dprime;
  return 4.0 * a * a * (1.0 + b_dprime * b_dprime) / (d * d);
}
double j0_lower(double a, double b_dprime) {
  const double d = 1.0 + a * b_dprime;
  return 8.0 * a * a * b_dprime / (d * d);
}
double velocity_lower(double b_dprime) {
  return 2.0 * b_dprime / (1.0 + b_dprime * b_dprime);
}

double r_negative_energy(double a, double b) {
  return (a * b + 1.0) / (a * b - 1.0);
}
double t_negative_energy(double a, double b) { return 2.0 * a / (1.0 - a * b); }
double reflection_negative_energy(double a, double b) {
  const double r = r_negative_energy(a, b);
  return r * r;
}
double transmission_negative_energy(double a, double b) {
  const double d = 1.0 - a * b;
  return 4.0 * a * std::abs(b) / (d * d);
}
double force_negative_energy(double step_height, double a, double b) {
  const double d = 1.0 - a * b;
  return -step_height * 4.0 * a * a * (1.0 + b * b) / (d * d);
}

double reflection_infinite_step(double a) {
  const double r = (a - 1.0) / (a + 1.0);
  return r * r;
}
double transmission_infinite_step(double a) {
  return 4.0 * a / ((a + 1.0) * (a + 1.0));
}
double reflection_double_energy_step(double a) {
  const double r = (a * a - 1.0) / (a * a + 1.0);
  return r * r;
}
double transmission_double_energy_step(double a) {
  const double d = a * a + 1.0;
  return 4.0 * a * a / (d * d);
}

}  // namespace closed_form

}  // namespace dirac_step
