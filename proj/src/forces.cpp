#include "dirac_step/forces.hpp"

#include <cmath>

namespace dirac_step {

double external_force_mean(const Spinor& psi0, double step_height) {
  return -step_height * density(psi0);
}

double external_force_mean(const ScatteringSolution& sol) {
  return external_force_mean(evaluate_right(sol, 0.0),
                             sol.kinematics.setup.step_height());
}

double boundary_force_mean(const Spinor& psi0, double energy,
                           double mass_energy) {
  const double large = std::norm(psi0.upper);
  const double small = std::norm(psi0.lower);
  return -energy * (large + small) + mass_energy * (large - small);
}

double nr_boundary_force_dirichlet(complex psi_x0, double mass_energy,
                                   double hbar_c) {
  if (!(mass_energy > 0.0)) {
    throw std::invalid_argument("nonrelativistic force needs mc^2 > 0");
  }
  return -hbar_c * hbar_c / (2.0 * mass_energy) * std::norm(psi_x0);
}

double nr_boundary_force_neumann(complex psi0, complex psi_xx0,
                                 double mass_energy, double hbar_c) {
  if (!(mass_energy > 0.0)) {
    throw std::invalid_argument("nonrelativistic force needs mc^2 > 0");
  }
  return hbar_c * hbar_c / (2.0 * mass_energy) *
         std::real(std::conj(psi0) * psi_xx0);
}

ForceReport force_report(const ScatteringSolution& sol) {
  const PhysicalSetup& setup = sol.kinematics.setup;
  const Spinor psi0 = evaluate_right(sol, 0.0);

  // d/dx of the upper component on the left: i k (phi_inc - phi_refl)
  const complex ik(0.0, sol.kinematics.k);
  const complex slope = ik * (sol.incident.amplitude().upper -
                              sol.reflected.amplitude().upper);
  const double nr = setup.mass_energy() > 0.0
                        ? nr_boundary_force_dirichlet(slope, setup.mass_energy(),
                                                      setup.hbar_c())
                        : std::nan("");
  return ForceReport{
      external_force_mean(psi0, setup.step_height()),
      boundary_force_mean(psi0, setup.energy(), setup.mass_energy()),
      nr,
  };
}

}  // namespace dirac_step
