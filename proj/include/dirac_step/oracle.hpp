#pragma once

#include <span>
#include <vector>

#include "dirac_step/matcher.hpp"

namespace dirac_step {

//! V(x) = V0 (1 + tanh(x / w)) / 2; tends to the sharp step as w -> 0.
struct SmoothStep {
  double height;
  double width;

  double operator()(double x) const;
};

struct OracleOptions {
  //! 0 selects max(10 max(1/k, 1/kbar), 40 w).
  double domain_half_width = 0.0;
  double tolerance = 1e-10;
};

struct OracleResult {
  complex r_num;
  complex t_num;
  double R_num;
  double T_num;
  double integration_error_estimate;
  double width;
  double domain_half_width;
  //! max |j(x) - j(L)| along the trajectory, relative to |j_incident|.
  double max_current_drift;
  std::size_t steps;
};

/*!
 * Numerical scattering through the smoothed step.
 *
 * The convention's transmitted wave is imposed at x = +L (MainEq6: outgoing
 * or decaying, TraditionalB2: positive momentum), the Dirac system
 *   psi' = (i / hbar c) sigma_x (E - V(x) - mc^2 sigma_z) psi
 * is integrated to x = -L, and psi(-L) is split into [1, a] e^{ikx} and
 * [1, -a] e^{-ikx}. NegativeEnergyB5 is not an eigenfunction at energy E and
 * is rejected, as is LowerFormA3 (same boundary condition as MainEq6).
 */
OracleResult integrate_scattering(const PhysicalSetup& setup,
                                  const SmoothStep& step, Convention convention,
                                  const OracleOptions& options = {});

//! Smallest admissible L for the setup and width.
double minimum_half_width(const PhysicalSetup& setup, double width);

//! Oracle wavefunction at the given (ascending) positions inside [-L, L],
//! normalized to a unit incident amplitude.
std::vector<Spinor> oracle_wavefunction(const PhysicalSetup& setup,
                                        const SmoothStep& step,
                                        Convention convention,
                                        std::span<const double> xs,
                                        const OracleOptions& options = {});

struct SharpLimitRow {
  double width;
  double R_num;
  double R_closed;
  double error;  //!< |R_num - R_closed|
};

std::vector<SharpLimitRow> sharp_limit_study(const PhysicalSetup& setup,
                                             Convention convention,
                                             std::span<const double> widths,
                                             const OracleOptions& options = {});

}  // namespace dirac_step
