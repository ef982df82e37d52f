#include "dirac_step/kinematics.hpp"

#include <cmath>

namespace dirac_step {

double incident_ratio(double energy, double mass_energy) {
  require_propagating(energy, mass_energy);
  if (mass_energy == 0.0) return 1.0;
  return std::sqrt((energy - mass_energy) / (energy + mass_energy));
}

double incident_wave_number(double energy, double mass_energy, double hbar_c) {
  require_propagating(energy, mass_energy);
  return std::sqrt((energy - mass_energy) * (energy + mass_energy)) / hbar_c;
}

Kinematics kinematics(const PhysicalSetup& setup) {
  const double m = setup.mass_energy();
  const double e = setup.energy();
  const double v0 = setup.step_height();
  const double hc = setup.hbar_c();
  const Regime regime = classify_regime(setup);

  Kinematics kin{setup, regime, incident_wave_number(e, m, hc), 0.0,
                 incident_ratio(e, m), {}, {}, {}};

  switch (regime) {
    case Regime::KleinZone: {
      // E - V0 + mc^2 and E - V0 - mc^2 are both negative here.
      const double above = v0 - (e + m);  // distance past the edge point
      const double below = v0 - (e - m);
      kin.kbar_or_kappa = std::sqrt(above * below) / hc;
      const double b_dprime = std::sqrt(above / below);
      kin.b_dprime = b_dprime;
      kin.b_prime = -b_dprime;
      kin.b = -std::sqrt(below / above);
      break;
    }
    case Regime::Transmission: {
      const double w = e - v0;
      kin.kbar_or_kappa = std::sqrt((w - m) * (w + m)) / hc;
      const double b = std::sqrt((w - m) / (w + m));
      kin.b = b;
      kin.b_prime = std::sqrt((w + m) / (w - m));
      kin.b_dprime = -kin.b_prime;
      break;
    }
    case Regime::Evanescent: {
      const double w = e - v0;
      const double gap_up = m - w;
      const double gap_down = (e + m) - v0;  // mc^2 + w
      kin.kbar_or_kappa = std::sqrt(gap_up * gap_down) / hc;
      const double ratio = std::sqrt(gap_up / gap_down);
      kin.b = complex(0.0, -ratio);
      kin.b_prime = complex(0.0, 1.0 / ratio);
      kin.b_dprime = complex(0.0, -std::sqrt(gap_down / gap_up));
      break;
    }
    case Regime::EdgeLower:
    case Regime::EdgePoint:
      throw DomainError(std::string("kinematics undefined at ") +
                        std::string(to_string(regime)) +
                        " (kbar = 0); use the limits module");
  }
  return kin;
}

}  // namespace dirac_step
