#pragma once

#include <optional>
#include <span>
#include <vector>

#include "dirac_step/matcher.hpp"

namespace dirac_step {

enum class LimitKind {
  ImpenetrableMain,  //!< V0 -> E + mc^2 with the positive-energy wave
  ImpenetrableB,     //!< same limit with the negative-energy wave
  NonRelMain,        //!< Schroedinger limit of ImpenetrableMain (Dirichlet)
  NonRelB,           //!< Schroedinger limit of ImpenetrableB (Neumann)
};

std::string_view to_string(LimitKind kind);

/*!
 * Closed-form piecewise solution reached at the edge of the Klein zone.
 *
 * ImpenetrableMain: [2i sin kx, 2a cos kx] for x <= 0, [0, 2a] for x >= 0
 * ImpenetrableB:    [2 cos kx, 2ia sin kx] for x <= 0, [2, 0]  for x >= 0
 * NonRelMain:       [2i sin(k x) Theta(-x), 0]
 * NonRelB:          [2 cos(k x) Theta(-x) + 2 Theta(x), 0]
 *
 * For the nonrelativistic kinds k is k^(NR) = sqrt(2 m E^(NR)) / hbar and a
 * is the leading-order sqrt(E^(NR) / 2mc^2).
 */
struct LimitSolution {
  LimitKind kind;
  double energy;          //!< total relativistic energy E
  double kinetic_energy;  //!< E - mc^2 (E^(NR) for the nonrelativistic kinds)
  double mass_energy;
  double hbar_c;
  double step_height;     //!< E + mc^2
  double a;
  double k;
  double R_limit = 1.0;
  double T_limit = 0.0;
  double v_t_limit = 0.0;
  //! -V0 rho(0) in the limit; for NonRelMain the Schroedinger value -4E^(NR).
  std::optional<double> external_force;
  //! Boundary quantum force (relativistic, or the Schroedinger form).
  double boundary_force = 0.0;

  bool nonrelativistic() const {
    return kind == LimitKind::NonRelMain || kind == LimitKind::NonRelB;
  }

  Spinor left(double x) const;
  Spinor right(double x) const;
  Spinor at(double x) const { return x <= 0.0 ? left(x) : right(x); }

  //! Plane-wave constituents of the x <= 0 branch (impenetrable kinds only).
  std::vector<PlaneWave> left_waves() const;
  //! The constant x >= 0 spinor as a q = 0 wave (impenetrable kinds only).
  PlaneWave right_wave() const;

  // Schroedinger wavefunction (upper component) on the x <= 0 branch.
  complex psi_nr(double x) const;
  complex psi_nr_dx(double x) const;
  complex psi_nr_dxx(double x) const;
};

//! conv must be MainEq6, LowerFormA3 or NegativeEnergyB5.
LimitSolution impenetrable_limit(double energy, double mass_energy,
                                 Convention convention, double hbar_c = 1.0);

//! kind must be NonRelMain or NonRelB; requires mc^2 > 0 and E^(NR) > 0.
LimitSolution nonrelativistic_limit(double kinetic_energy, double mass_energy,
                                    LimitKind kind, double hbar_c = 1.0);

//! V0 -> infinity at fixed E: b -> -1.
struct InfiniteStepLimit {
  double a;
  double b;
  complex r;
  complex t;
  double R;
  double T;
};

InfiniteStepLimit infinite_step_limit(double energy, double mass_energy);

//---------------------------------------------------------------------------//
// Numerical approach to the edge point
//---------------------------------------------------------------------------//

struct ConvergenceRow {
  double delta;        //!< V0 - (E + mc^2)
  double step_height;
  Regime regime;
  double R;
  double T;
  std::optional<double> v_t;
  double rho0;
  double force;
};

/*!
 * Matched observables at V0 = E + mc^2 + delta. Positive deltas approach
 * through the Klein zone, deltas in (-mc^2, 0) through the evanescent zone.
 */
std::vector<ConvergenceRow> convergence_scan(double energy, double mass_energy,
                                             Convention convention,
                                             std::span<const double> deltas,
                                             double hbar_c = 1.0);

struct PowerLawFit {
  double exponent;
  double prefactor;
};

//! Least squares of log y against log x; all values must be positive.
PowerLawFit fit_power_law(std::span<const double> xs,
                          std::span<const double> ys);

//! T ~ C delta^p over the rows with delta > 0.
PowerLawFit fit_transmission_exponent(std::span<const ConvergenceRow> rows);

}  // namespace dirac_step
