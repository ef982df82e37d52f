#pragma once

#include <optional>

#include "dirac_step/matcher.hpp"

namespace dirac_step {

struct ObservableSet {
  double R;     //!< |j_r| / |j_i|
  double T;     //!< j_t / j_i, signed; 0 in the evanescent regime
  double rho0;  //!< probability density at the origin
  double j0;    //!< probability current at the origin
  std::optional<double> v_t;  //!< j_t / rho_t; absent without a propagating wave
  double j_incident;
  double j_reflected;
  double j_transmitted;
};

//! Everything is computed from the plane-wave currents, not closed forms.
ObservableSet coefficients(const ScatteringSolution& sol);

struct DensityCurrent {
  double rho;
  double j;
};

DensityCurrent density_current_at_origin(const ScatteringSolution& sol);

//! Throws DomainError in the evanescent regime (j_t = 0, decaying wave).
double transmitted_velocity(const ScatteringSolution& sol);

/// Closed-form expressions for the Klein zone, used to cross-check the
/// generic matcher. a > 0, b < 0, b_dprime = -1/b > 0.
namespace closed_form {

double reflection_main(double a, double b);
double transmission_main(double a, double b);
double rho0_main(double a, double b);
double j0_main(double a, double b);
double velocity_main(double b);
double velocity_from_energies(double energy, double step_height,
                              double mass_energy);
double force_main(double step_height, double a, double b);

double r_lower(double a, double b_dprime);
double t_lower(double a, double b_dprime);
double reflection_lower(double a, double b_dprime);
double transmission_lower(double a, double b_dprime);
double rho0_lower(double a, double b_dprime);
double j0_lower(double a, double b_dprime);
double velocity_lower(double b_dprime);

double r_negative_energy(double a, double b);
double t_negative_energy(double a, double b);
double reflection_negative_energy(double a, double b);
double transmission_negative_energy(double a, double b);
double force_negative_energy(double step_height, double a, double b);

// Special cases
double reflection_infinite_step(double a);
double transmission_infinite_step(double a);
double reflection_double_energy_step(double a);   // V0 = 2E
double transmission_double_energy_step(double a);

}  // namespace closed_form

}  // namespace dirac_step
