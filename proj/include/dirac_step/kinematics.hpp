#pragma once

#include "dirac_step/setup.hpp"

namespace dirac_step {

//! Above this |b| the matcher switches to the b'' = -1/b parametrization.
inline constexpr double kNearSingularRatio = 1e6;

/*!
 * Wave numbers and spinor ratios of the piecewise plane-wave solution.
 *
 * a is the lower/upper ratio of the incident wave [1, a] e^{ikx}. b keeps the
 * signed definition c hbar kbar / (E - V0 + mc^2):
 *   - KleinZone: real and negative
 *   - Transmission: real and positive
 *   - Evanescent: pure imaginary, continued through kbar -> -i kappa so that
 *     [1, -b] e^{-kappa x} is the decaying transmitted wave
 * b_prime = 1/b and b_dprime = -1/b are computed directly from energy
 * differences so they stay accurate when |b| is huge.
 */
struct Kinematics {
  PhysicalSetup setup;
  Regime regime;
  double k;              //!< incident wave number
  double kbar_or_kappa;  //!< kbar (Klein/Transmission) or kappa (Evanescent)
  double a;
  complex b;
  complex b_prime;
  complex b_dprime;

  bool near_singular() const { return std::abs(b) > kNearSingularRatio; }
};

//! Throws DomainError on EdgeLower/EdgePoint (kbar = 0); use the limits module.
Kinematics kinematics(const PhysicalSetup& setup);

//! Incident-side ratio a = sqrt((E - mc^2)/(E + mc^2)); exactly 1 when massless.
double incident_ratio(double energy, double mass_energy);

//! c hbar k = sqrt(E^2 - (mc^2)^2), divided by hbar_c.
double incident_wave_number(double energy, double mass_energy,
                            double hbar_c = 1.0);

}  // namespace dirac_step
