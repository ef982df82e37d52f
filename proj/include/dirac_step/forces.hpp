#pragma once

#include "dirac_step/matcher.hpp"

namespace dirac_step {

struct ForceReport {
  double external_mean;     //!< <f> = -V0 rho(0)
  double boundary_mean;     //!< relativistic boundary quantum force
  double nr_boundary_mean;  //!< nonrelativistic boundary force (Dirichlet form)
};

/*!
 * Mean of f = -dV/dx = -V0 delta(x) in the matched state.
 *
 * The delta function is never discretized: sifting gives -V0 rho(0).
 */
double external_force_mean(const ScatteringSolution& sol);
double external_force_mean(const Spinor& psi0, double step_height);

/*!
 * Boundary quantum force of a stationary state at the wall,
 *   -i hbar Psi^dagger Psi_t + mc^2 Psi^dagger sigma_z Psi
 * with Psi_t = -(iE/hbar) Psi, i.e. -E rho(0) + mc^2 (|phi|^2 - |chi|^2).
 */
double boundary_force_mean(const Spinor& psi0, double energy,
                           double mass_energy);

//! The bracketed flux of the half-line momentum balance at an arbitrary x.
//! At x = 0 it equals boundary_force_mean.
inline double boundary_flux(const Spinor& psi, double energy,
                            double mass_energy) {
  return boundary_force_mean(psi, energy, mass_energy);
}

//! Dirichlet wall: -(hbar^2 / 2m) |psi_x(0)|^2.
double nr_boundary_force_dirichlet(complex psi_x0, double mass_energy,
                                   double hbar_c = 1.0);

//! Neumann wall: +(hbar^2 / 2m) Re(psi^*(0) psi_xx(0)).
double nr_boundary_force_neumann(complex psi0, complex psi_xx0,
                                 double mass_energy, double hbar_c = 1.0);

//! Forces for a matched solution. The nonrelativistic entry is the Dirichlet
//! form evaluated on the upper component's slope at 0-.
ForceReport force_report(const ScatteringSolution& sol);

}  // namespace dirac_step
