#pragma once

#include <optional>
#include <string_view>

#include "dirac_step/kinematics.hpp"
#include "dirac_step/spinor.hpp"

namespace dirac_step {

/*!
 * Choice of transmitted plane wave under the step.
 *
 * In the Klein zone:
 *   MainEq6           [1, -b]  e^{-i kbar x}   positive velocity field
 *   LowerFormA3       [b'', 1] e^{-i kbar x}   same wave, lower-normalized
 *   TraditionalB2     [1, b]   e^{+i kbar x}   gives R > 1
 *   NegativeEnergyB5  [-b, 1]  e^{+i kbar x}   charge conjugate of MainEq6
 *
 * Outside the Klein zone MainEq6 keeps its role (the outgoing or decaying
 * wave), TraditionalB2 stays the positive-momentum wave and the other two are
 * derived from MainEq6 the same way.
 */
enum class Convention { MainEq6, LowerFormA3, TraditionalB2, NegativeEnergyB5 };

inline constexpr Convention kAllConventions[] = {
    Convention::MainEq6, Convention::LowerFormA3, Convention::TraditionalB2,
    Convention::NegativeEnergyB5};

std::string_view to_string(Convention convention);
//! Accepts the enum names and the short CLI names (main, lower, a3,
//! traditional, b2, b5, negative-energy).
std::optional<Convention> parse_convention(std::string_view text);

//! Transmitted wave of the convention with unit coefficient.
PlaneWave transmitted_wave(const Kinematics& kin, Convention convention);

struct ScatteringSolution {
  Convention convention;
  Kinematics kinematics;
  PlaneWave incident;     //!< [1, a] e^{ikx}
  PlaneWave reflected;    //!< r [1, -a] e^{-ikx}
  PlaneWave transmitted;  //!< t * transmitted_wave(...)
  complex r;
  complex t;
};

//! Continuity at x = 0 for the given transmitted convention.
ScatteringSolution match(const Kinematics& kin, Convention convention);

//! Incident + reflected (the x <= 0 branch), evaluated anywhere.
Spinor evaluate_left(const ScatteringSolution& sol, double x);
//! Transmitted branch, evaluated anywhere.
Spinor evaluate_right(const ScatteringSolution& sol, double x);
//! Piecewise solution; x <= 0 uses the left branch.
Spinor evaluate(const ScatteringSolution& sol, double x);

//! |psi(0-) - psi(0+)|
double continuity_residual(const ScatteringSolution& sol);

}  // namespace dirac_step
