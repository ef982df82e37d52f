#include "dirac_step/setup.hpp"

#include <cmath>

namespace dirac_step {

namespace {

void require_finite(double value, const char* name) {
  if (!std::isfinite(value)) {
    throw std::invalid_argument(std::string(name) + " must be finite");
  }
}

}  // namespace

void require_propagating(double energy, double mass_energy) {
  require_finite(energy, "energy");
  require_finite(mass_energy, "mass_energy");
  if (mass_energy < 0.0) {
    throw std::invalid_argument("mass_energy must be >= 0");
  }
  if (!(energy > mass_energy)) {
    throw DomainError("energy must exceed mc^2 (no propagating incident wave)");
  }
}

PhysicalSetup::PhysicalSetup(double mass_energy, double step_height,
                             double energy, double hbar_c)
    : mass_energy_(mass_energy),
      step_height_(step_height),
      energy_(energy),
      hbar_c_(hbar_c) {
  require_finite(step_height, "step_height");
  require_finite(hbar_c, "hbar_c");
  if (!(step_height > 0.0)) {
    throw std::invalid_argument("step_height must be > 0");
  }
  if (!(hbar_c > 0.0)) {
    throw std::invalid_argument("hbar_c must be > 0");
  }
  require_propagating(energy, mass_energy);
}

PhysicalSetup PhysicalSetup::with_step_height(double step_height) const {
  return PhysicalSetup(mass_energy_, step_height, energy_, hbar_c_);
}

std::string_view to_string(Regime regime) {
  switch (regime) {
    case Regime::Transmission: return "Transmission";
    case Regime::Evanescent: return "Evanescent";
    case Regime::KleinZone: return "KleinZone";
    case Regime::EdgeLower: return "EdgeLower";
    case Regime::EdgePoint: return "EdgePoint";
  }
  return "Unknown";
}

Regime classify_regime(const PhysicalSetup& setup) {
  const double upper = setup.energy() + setup.mass_energy();
  const double lower = setup.energy() - setup.mass_energy();
  const double v0 = setup.step_height();
  // EdgePoint first: for mc^2 = 0 both edges coincide.
  if (v0 == upper) return Regime::EdgePoint;
  if (v0 == lower) return Regime::EdgeLower;
  if (v0 > upper) return Regime::KleinZone;
  if (v0 < lower) return Regime::Transmission;
  return Regime::Evanescent;
}

}  // namespace dirac_step
