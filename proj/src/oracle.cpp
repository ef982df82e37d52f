#include "dirac_step/oracle.hpp"

#include <algorithm>
#include <cmath>

#include "dirac_step/observables.hpp"
#include "dirac_step/ode.hpp"

namespace dirac_step {

namespace {

constexpr complex kI(0.0, 1.0);

struct DiracRhs {
  double energy;
  double mass_energy;
  double hbar_c;
  SmoothStep step;

  Spinor operator()(double x, const Spinor& psi) const {
    const double kinetic = energy - step(x);
    const complex scale = kI / hbar_c;
    return {scale * (kinetic + mass_energy) * psi.lower,
            scale * (kinetic - mass_energy) * psi.upper};
  }
};

void require_oracle_convention(Convention convention) {
  if (convention != Convention::MainEq6 &&
      convention != Convention::TraditionalB2) {
    throw std::invalid_argument(
        std::string("oracle supports MainEq6 and TraditionalB2, not ") +
        std::string(to_string(convention)));
  }
}

double resolve_half_width(const PhysicalSetup& setup, const SmoothStep& step,
                          const OracleOptions& options) {
  if (!(step.width > 0.0)) {
    throw std::invalid_argument("smoothing width must be > 0");
  }
  if (step.height != setup.step_height()) {
    throw std::invalid_argument("smooth step height differs from the setup");
  }
  if (!(options.tolerance >= 1e-13 && options.tolerance <= 1e-6)) {
    throw std::invalid_argument("oracle tolerance must lie in [1e-13, 1e-6]");
  }
  const double minimum = minimum_half_width(setup, step.width);
  if (options.domain_half_width == 0.0) {
    return std::max(minimum, 40.0 * step.width);
  }
  if (options.domain_half_width < minimum) {
    throw std::invalid_argument("domain half-width below 10 max(1/k, 1/kbar, w)");
  }
  return options.domain_half_width;
}

// Split psi(x) on the left into incident and reflected coefficients.
struct Decomposition {
  complex incident;
  complex reflected;
};

Decomposition decompose(const Spinor& psi, double a, double k, double x) {
  const complex forward = 0.5 * (psi.upper + psi.lower / a);
  const complex backward = 0.5 * (psi.upper - psi.lower / a);
  return {forward * std::exp(-kI * k * x), backward * std::exp(kI * k * x)};
}

struct Run {
  Decomposition coeff;
  complex boundary_phase;  // e^{-iqL}: scale of the imposed wave
  double j_transmitted;
  ode::IntegrationStats stats;
  double max_drift;
  std::vector<Spinor> samples;
};

Run run(const PhysicalSetup& setup, const SmoothStep& step,
        Convention convention, double half_width, double tolerance,
        std::span<const double> stops) {
  const Kinematics kin = kinematics(setup);
  const PlaneWave out = transmitted_wave(kin, convention);

  Spinor psi = out.amplitude();
  const double j_end = current(psi);

  ode::StepControl control;
  control.rtol = tolerance;
  control.atol = tolerance * 1e-2 * norm(psi);
  control.initial_step = std::min(step.width, half_width) * 0.1;

  double max_drift = 0.0;
  std::vector<Spinor> samples;
  std::size_t next = stops.size();  // visited from the largest position down
  auto observer = [&](double x, const Spinor& y) {
    max_drift = std::max(max_drift, std::abs(current(y) - j_end));
    if (next > 0 && stops[next - 1] == x) {
      samples.push_back(y);
      --next;
    }
  };

  // integrate right to left; stops must be visited in descending order
  std::vector<double> descending(stops.rbegin(), stops.rend());
  const DiracRhs rhs{setup.energy(), setup.mass_energy(), setup.hbar_c(), step};
  const ode::IntegrationStats stats = ode::integrate_dp45(
      rhs, half_width, -half_width, psi, control, observer, descending);

  const Decomposition coeff = decompose(psi, kin.a, kin.k, -half_width);
  const double scale = std::max(norm(psi), 1e-300);
  if (std::abs(coeff.incident) < 1e-8 * scale) {
    throw DomainError("ill-conditioned decomposition: no incident component");
  }

  if (samples.size() != stops.size()) {
    throw std::logic_error("oracle missed a sample position");
  }
  std::reverse(samples.begin(), samples.end());
  return Run{coeff,
             std::exp(-kI * out.wave_number() * half_width),
             j_end,
             stats,
             max_drift,
             std::move(samples)};
}

}  // namespace

double SmoothStep::operator()(double x) const {
  return 0.5 * height * (1.0 + std::tanh(x / width));
}

double minimum_half_width(const PhysicalSetup& setup, double width) {
  const Kinematics kin = kinematics(setup);
  return 10.0 * std::max({1.0 / kin.k, 1.0 / kin.kbar_or_kappa, width});
}

OracleResult integrate_scattering(const PhysicalSetup& setup,
                                  const SmoothStep& step, Convention convention,
                                  const OracleOptions& options) {
  require_oracle_convention(convention);
  const double half_width = resolve_half_width(setup, step, options);
  const Run result =
      run(setup, step, convention, half_width, options.tolerance, {});

  const double a = kinematics(setup).a;
  const complex A = result.coeff.incident;
  const double j_incident = current(Spinor{1.0, a}) * std::norm(A);
  const bool evanescent = classify_regime(setup) == Regime::Evanescent;

  return OracleResult{
      result.coeff.reflected / A,
      result.boundary_phase / A,
      std::norm(result.coeff.reflected) / std::norm(A),
      evanescent ? 0.0 : result.j_transmitted / j_incident,
      result.stats.error_estimate / std::abs(A),
      step.width,
      half_width,
      result.max_drift / j_incident,
      result.stats.accepted,
  };
}

std::vector<Spinor> oracle_wavefunction(const PhysicalSetup& setup,
                                        const SmoothStep& step,
                                        Convention convention,
                                        std::span<const double> xs,
                                        const OracleOptions& options) {
  require_oracle_convention(convention);
  const double half_width = resolve_half_width(setup, step, options);
  if (!std::is_sorted(xs.begin(), xs.end()) ||
      std::adjacent_find(xs.begin(), xs.end()) != xs.end()) {
    throw std::invalid_argument("sample positions must be strictly ascending");
  }
  if (!xs.empty() && (xs.front() < -half_width || xs.back() > half_width)) {
    throw std::invalid_argument("sample positions outside [-L, L]");
  }
  Run result =
      run(setup, step, convention, half_width, options.tolerance, xs);
  const complex inv = 1.0 / result.coeff.incident;
  for (Spinor& s : result.samples) s = inv * s;
  return result.samples;
}

std::vector<SharpLimitRow> sharp_limit_study(const PhysicalSetup& setup,
                                             Convention convention,
                                             std::span<const double> widths,
                                             const OracleOptions& options) {
  const ScatteringSolution sol = match(kinematics(setup), convention);
  const double closed = coefficients(sol).R;
  std::vector<SharpLimitRow> rows;
  rows.reserve(widths.size());
  for (double w : widths) {
    const OracleResult res = integrate_scattering(
        setup, SmoothStep{setup.step_height(), w}, convention, options);
    rows.push_back({w, res.R_num, closed, std::abs(res.R_num - closed)});
  }
  return rows;
}

}  // namespace dirac_step
