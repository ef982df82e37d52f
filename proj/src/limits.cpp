#include "dirac_step/limits.hpp"

#include <cmath>

#include "dirac_step/forces.hpp"
#include "dirac_step/observables.hpp"

namespace dirac_step {

namespace {

constexpr complex kI(0.0, 1.0);

void require_relativistic_kind(const LimitSolution& lim, const char* what) {
  if (lim.nonrelativistic()) {
    throw std::logic_error(std::string(what) +
                           " is defined for the impenetrable limits only");
  }
}

}  // namespace

std::string_view to_string(LimitKind kind) {
  switch (kind) {
    case LimitKind::ImpenetrableMain: return "ImpenetrableMain";
    case LimitKind::ImpenetrableB: return "ImpenetrableB";
    case LimitKind::NonRelMain: return "NonRelMain";
    case LimitKind::NonRelB: return "NonRelB";
  }
  return "Unknown";
}

Spinor LimitSolution::left(double x) const {
  const double s = std::sin(k * x);
  const double c = std::cos(k * x);
  switch (kind) {
    case LimitKind::ImpenetrableMain: return {2.0 * kI * s, 2.0 * a * c};
    case LimitKind::ImpenetrableB: return {2.0 * c, 2.0 * kI * a * s};
    case LimitKind::NonRelMain: return {2.0 * kI * s, 0.0};
    case LimitKind::NonRelB: return {2.0 * c, 0.0};
  }
  return {};
}

Spinor LimitSolution::right(double) const {
  switch (kind) {
    case LimitKind::ImpenetrableMain: return {0.0, 2.0 * a};
    case LimitKind::ImpenetrableB: return {2.0, 0.0};
    case LimitKind::NonRelMain: return {0.0, 0.0};
    case LimitKind::NonRelB: return {2.0, 0.0};
  }
  return {};
}

std::vector<PlaneWave> LimitSolution::left_waves() const {
  require_relativistic_kind(*this, "left_waves");
  // reflection amplitude -1 (main) or +1 (B) on [1, -a] e^{-ikx}
  const double r = kind == LimitKind::ImpenetrableMain ? -1.0 : 1.0;
  return {PlaneWave({1.0, a}, k, Side::Left),
          PlaneWave({r, -r * a}, -k, Side::Left)};
}

PlaneWave LimitSolution::right_wave() const {
  require_relativistic_kind(*this, "right_wave");
  return PlaneWave(right(0.0), 0.0, Side::Right);
}

complex LimitSolution::psi_nr(double x) const {
  return x <= 0.0 ? left(x).upper : right(x).upper;
}

complex LimitSolution::psi_nr_dx(double x) const {
  if (x > 0.0) return 0.0;
  switch (kind) {
    case LimitKind::NonRelMain:
    case LimitKind::ImpenetrableMain:
      return 2.0 * kI * k * std::cos(k * x);
    case LimitKind::NonRelB:
    case LimitKind::ImpenetrableB:
      return -2.0 * k * std::sin(k * x);
  }
  return 0.0;
}

complex LimitSolution::psi_nr_dxx(double x) const {
  if (x > 0.0) return 0.0;
  return -k * k * psi_nr(x);
}

LimitSolution impenetrable_limit(double energy, double mass_energy,
                                 Convention convention, double hbar_c) {
  require_propagating(energy, mass_energy);
  LimitKind kind{};
  switch (convention) {
    case Convention::MainEq6:
    case Convention::LowerFormA3:
      kind = LimitKind::ImpenetrableMain;
      break;
    case Convention::NegativeEnergyB5:
      kind = LimitKind::ImpenetrableB;
      break;
    case Convention::TraditionalB2:
      throw std::invalid_argument(
          "impenetrable limit defined for MainEq6, LowerFormA3, "
          "NegativeEnergyB5");
  }

  LimitSolution lim{};
  lim.kind = kind;
  lim.energy = energy;
  lim.kinetic_energy = energy - mass_energy;
  lim.mass_energy = mass_energy;
  lim.hbar_c = hbar_c;
  lim.step_height = energy + mass_energy;
  lim.a = incident_ratio(energy, mass_energy);
  lim.k = incident_wave_number(energy, mass_energy, hbar_c);

  const Spinor psi0 = lim.right(0.0);
  lim.external_force = external_force_mean(psi0, lim.step_height);
  lim.boundary_force = boundary_force_mean(psi0, energy, mass_energy);
  return lim;
}

LimitSolution nonrelativistic_limit(double kinetic_energy, double mass_energy,
                                    LimitKind kind, double hbar_c) {
  if (kind != LimitKind::NonRelMain && kind != LimitKind::NonRelB) {
    throw std::invalid_argument("nonrelativistic kind must be NonRelMain or NonRelB");
  }
  if (!(mass_energy > 0.0) || !(kinetic_energy > 0.0) ||
      !std::isfinite(kinetic_energy) || !std::isfinite(mass_energy)) {
    throw std::invalid_argument("nonrelativistic limit needs mc^2 > 0, E > 0");
  }

  LimitSolution lim{};
  lim.kind = kind;
  lim.energy = mass_energy + kinetic_energy;
  lim.kinetic_energy = kinetic_energy;
  lim.mass_energy = mass_energy;
  lim.hbar_c = hbar_c;
  lim.step_height = lim.energy + mass_energy;
  lim.a = std::sqrt(kinetic_energy / (2.0 * mass_energy));
  lim.k = std::sqrt(2.0 * mass_energy * kinetic_energy) / hbar_c;

  if (kind == LimitKind::NonRelMain) {
    lim.external_force = -4.0 * kinetic_energy;
    lim.boundary_force =
        nr_boundary_force_dirichlet(lim.psi_nr_dx(0.0), mass_energy, hbar_c);
  } else {
    lim.external_force = std::nullopt;
    lim.boundary_force = nr_boundary_force_neumann(
        lim.psi_nr(0.0), lim.psi_nr_dxx(0.0), mass_energy, hbar_c);
  }
  return lim;
}

InfiniteStepLimit infinite_step_limit(double energy, double mass_energy) {
  const double a = incident_ratio(energy, mass_energy);
  constexpr double b = -1.0;
  // continuity with the transmitted spinor [1, -b] = [1, 1]
  const Spinor u{1.0, -b};
  const complex t = 2.0 * a / (u.lower + a * u.upper);
  const complex r = t * u.upper - 1.0;
  const double j_i = current({1.0, a});
  return InfiniteStepLimit{
      a,
      b,
      r,
      t,
      std::abs(current(r * Spinor{1.0, -a})) / j_i,
      current(t * u) / j_i,
  };
}

std::vector<ConvergenceRow> convergence_scan(double energy, double mass_energy,
                                             Convention convention,
                                             std::span<const double> deltas,
                                             double hbar_c) {
  require_propagating(energy, mass_energy);
  std::vector<ConvergenceRow> rows;
  rows.reserve(deltas.size());
  for (double delta : deltas) {
    if (!(delta > 0.0) && !(delta < 0.0 && delta > -mass_energy)) {
      throw std::invalid_argument(
          "delta must be > 0 or inside (-mc^2, 0)");
    }
    const double v0 = energy + mass_energy + delta;
    const PhysicalSetup setup(mass_energy, v0, energy, hbar_c);
    const ScatteringSolution sol = match(kinematics(setup), convention);
    const ObservableSet obs = coefficients(sol);
    rows.push_back(ConvergenceRow{
        delta,
        v0,
        sol.kinematics.regime,
        obs.R,
        obs.T,
        obs.v_t,
        obs.rho0,
        external_force_mean(sol),
    });
  }
  return rows;
}

PowerLawFit fit_power_law(std::span<const double> xs,
                          std::span<const double> ys) {
  if (xs.size() != ys.size() || xs.size() < 2) {
    throw std::invalid_argument("power-law fit needs >= 2 paired samples");
  }
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!(xs[i] > 0.0) || !(ys[i] > 0.0)) {
      throw std::invalid_argument("power-law fit needs positive samples");
    }
    const double lx = std::log(xs[i]);
    const double ly = std::log(ys[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double n = static_cast<double>(xs.size());
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  const double intercept = (sy - slope * sx) / n;
  return {slope, std::exp(intercept)};
}

PowerLawFit fit_transmission_exponent(std::span<const ConvergenceRow> rows) {
  std::vector<double> xs;
  std::vector<double> ys;
  for (const auto& row : rows) {
    if (row.delta > 0.0) {
      xs.push_back(row.delta);
      ys.push_back(row.T);
    }
  }
  return fit_power_law(xs, ys);
}

}  // namespace dirac_step
