#pragma once

#include "dirac_step/limits.hpp"
#include "dirac_step/matcher.hpp"

namespace dirac_step {

enum class BoundaryCondition {
  DirichletUpper,  //!< phi(0) = 0
  DirichletLower,  //!< chi(0) = 0
  NeumannNR,       //!< psi_x^(NR)(0) = 0
  DirichletNR,     //!< psi^(NR)(0) = 0
  None,
};

std::string_view to_string(BoundaryCondition bc);

inline constexpr double kDefaultBoundaryTolerance = 1e-10;

struct BoundaryReport {
  complex phi0;
  complex chi0;
  double j0;
  BoundaryCondition classification;
  bool impenetrable;  //!< |j0| <= tolerance * rho(0)
  //! psi(0) = 0 on both components. Reported only; this condition does not
  //! give a self-adjoint Dirac Hamiltonian.
  bool both_components_zero;
};

//! Component test relative to max(|phi0|, |chi0|).
BoundaryReport classify_boundary(const Spinor& psi0,
                                 double tolerance = kDefaultBoundaryTolerance);

BoundaryReport classify_boundary(const ScatteringSolution& sol,
                                 double tolerance = kDefaultBoundaryTolerance);

//! Nonrelativistic kinds are classified on psi^(NR) and its slope at 0-.
BoundaryReport classify_boundary(const LimitSolution& lim,
                                 double tolerance = kDefaultBoundaryTolerance);

}  // namespace dirac_step
