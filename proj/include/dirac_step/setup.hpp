#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dirac_step {

using complex = std::complex<double>;

//! Raised when a quantity is requested where it does not exist (edge points,
//! evanescent transmitted velocity, growing waves, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

//---------------------------------------------------------------------------//
/*!
 * Problem statement for a Dirac particle hitting the potential step
 * V(x) = V0 Theta(x).
 *
 * Natural units: c = 1 and every input is an energy in one common unit.
 * Lengths come out in units of hbar_c / energy.
 */
class PhysicalSetup {
 public:
  PhysicalSetup(double mass_energy, double step_height, double energy,
                double hbar_c = 1.0);

  double mass_energy() const { return mass_energy_; }
  double step_height() const { return step_height_; }
  double energy() const { return energy_; }
  double hbar_c() const { return hbar_c_; }

  //! Same particle and energy, different step.
  PhysicalSetup with_step_height(double step_height) const;

 private:
  double mass_energy_;
  double step_height_;
  double energy_;
  double hbar_c_;
};

// Checks shared by every entry point that takes (E, mc^2) without a step.
void require_propagating(double energy, double mass_energy);

enum class Regime {
  Transmission,  //!< V0 < E - mc^2
  Evanescent,    //!< E - mc^2 < V0 < E + mc^2
  KleinZone,     //!< V0 > E + mc^2
  EdgeLower,     //!< V0 == E - mc^2
  EdgePoint,     //!< V0 == E + mc^2
};

std::string_view to_string(Regime regime);

//! Bitwise comparison on the edges; no tolerance.
Regime classify_regime(const PhysicalSetup& setup);

}  // namespace dirac_step
