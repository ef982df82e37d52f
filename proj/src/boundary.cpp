#include "dirac_step/boundary.hpp"

#include <algorithm>
#include <cmath>

namespace dirac_step {

std::string_view to_string(BoundaryCondition bc) {
  switch (bc) {
    case BoundaryCondition::DirichletUpper: return "DirichletUpper";
    case BoundaryCondition::DirichletLower: return "DirichletLower";
    case BoundaryCondition::NeumannNR: return "NeumannNR";
    case BoundaryCondition::DirichletNR: return "DirichletNR";
    case BoundaryCondition::None: return "None";
  }
  return "Unknown";
}

BoundaryReport classify_boundary(const Spinor& psi0, double tolerance) {
  if (!(tolerance > 0.0)) {
    throw std::invalid_argument("boundary tolerance must be > 0");
  }
  const double upper = std::abs(psi0.upper);
  const double lower = std::abs(psi0.lower);
  const double scale = std::max(upper, lower);
  const double j0 = current(psi0);

  BoundaryReport report{psi0.upper, psi0.lower, j0, BoundaryCondition::None,
                        std::abs(j0) <= tolerance * density(psi0), false};
  if (scale == 0.0) {
    report.both_components_zero = true;
    return report;
  }
  if (upper <= tolerance * scale) {
    report.classification = BoundaryCondition::DirichletUpper;
  } else if (lower <= tolerance * scale) {
    report.classification = BoundaryCondition::DirichletLower;
  }
  return report;
}

BoundaryReport classify_boundary(const ScatteringSolution& sol,
                                 double tolerance) {
  return classify_boundary(evaluate_right(sol, 0.0), tolerance);
}

BoundaryReport classify_boundary(const LimitSolution& lim, double tolerance) {
  if (!lim.nonrelativistic()) {
    return classify_boundary(lim.right(0.0), tolerance);
  }
  if (!(tolerance > 0.0)) {
    throw std::invalid_argument("boundary tolerance must be > 0");
  }
  const Spinor psi0 = lim.left(0.0);
  const complex value = lim.psi_nr(0.0);
  // slope scaled by 1/k so both tests compare like quantities
  const complex slope = lim.psi_nr_dx(0.0) / lim.k;
  const double scale = std::max(std::abs(value), std::abs(slope));

  const double j0 = current(psi0);
  BoundaryReport report{psi0.upper, psi0.lower, j0, BoundaryCondition::None,
                        std::abs(j0) <= tolerance * density(psi0), false};
  report.both_components_zero = psi0.upper == 0.0 && psi0.lower == 0.0;
  if (scale == 0.0) return report;
  if (std::abs(value) <= tolerance * scale) {
    report.classification = BoundaryCondition::DirichletNR;
  } else if (std::abs(slope) <= tolerance * scale) {
    report.classification = BoundaryCondition::NeumannNR;
  }
  return report;
}

}  // namespace dirac_step
