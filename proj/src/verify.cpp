#include "dirac_step/verify.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "dirac_step/boundary.hpp"
#include "dirac_step/limits.hpp"
#include "dirac_step/observables.hpp"
#include "dirac_step/oracle.hpp"

namespace dirac_step::verify {

namespace {

std::string sci(double value) {
  std::ostringstream os;
  os << std::scientific << std::setprecision(3) << value;
  return os.str();
}

void record(SuiteReport& report, double error, const std::string& what) {
  if (std::isnan(error) || error > report.threshold) {
    report.failures.push_back(what + " error=" + sci(error));
  }
  if (!std::isnan(error)) report.max_error = std::max(report.max_error, error);
}

double relative(double value, double expected) {
  return std::abs(value - expected) / std::max(1.0, std::abs(expected));
}

}  // namespace

double SetupSampler::open_unit() {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double u = 0.0;
  do {
    u = unit(engine_);
  } while (u == 0.0);
  return u;
}

double SetupSampler::draw_energy() {
  const double lo = std::log(1.0 + 1e-3);
  const double hi = std::log(1e3);
  return std::exp(lo + (hi - lo) * open_unit());
}

PhysicalSetup SetupSampler::draw(Regime regime) {
  constexpr double m = 1.0;
  for (;;) {
    const double e = draw_energy();
    const double u = open_unit();
    double v0 = 0.0;
    switch (regime) {
      case Regime::KleinZone: v0 = (e + m) * (1.0 + 2.0 * u); break;
      case Regime::Evanescent: v0 = (e - m) + 2.0 * m * u; break;
      case Regime::Transmission: v0 = (e - m) * u; break;
      default:
        throw std::invalid_argument("can only draw open regimes");
    }
    if (!(v0 > 0.0)) continue;
    PhysicalSetup setup(m, v0, e);
    if (classify_regime(setup) == regime) return setup;
  }
}

std::string describe(const PhysicalSetup& setup) {
  std::ostringstream os;
  os.precision(17);
  os << "mass_energy=" << setup.mass_energy()
     << " step_height=" << setup.step_height() << " energy=" << setup.energy();
  return os.str();
}

SuiteReport conservation_suite(std::uint64_t seed,
                               std::size_t trials_per_regime) {
  SuiteReport report{"conservation", 0, 0.0, 1e-12, {}};
  SetupSampler sampler(seed);
  for (Regime regime :
       {Regime::Transmission, Regime::Evanescent, Regime::KleinZone}) {
    for (std::size_t i = 0; i < trials_per_regime; ++i) {
      const PhysicalSetup setup = sampler.draw(regime);
      const Kinematics kin = kinematics(setup);
      for (Convention conv : kAllConventions) {
        if (regime == Regime::Evanescent && conv == Convention::TraditionalB2) {
          continue;
        }
        const ScatteringSolution sol = match(kin, conv);
        const ObservableSet obs = coefficients(sol);
        const std::string where =
            std::string(to_string(conv)) + " " + describe(setup);
        record(report, std::abs(obs.R + obs.T - 1.0), "R+T-1 " + where);
        record(report, continuity_residual(sol), "continuity " + where);
        ++report.trials;
      }
    }
  }
  return report;
}

SuiteReport oracle_suite(std::uint64_t seed, std::size_t trials, double width,
                         double threshold, double tolerance) {
  SuiteReport report{"closed-vs-oracle", 0, 0.0, threshold, {}};
  SetupSampler sampler(seed);
  OracleOptions options;
  options.tolerance = tolerance;
  for (std::size_t i = 0; i < trials; ++i) {
    const PhysicalSetup setup = sampler.draw(Regime::KleinZone);
    const std::string where = describe(setup);
    try {
      const double closed =
          coefficients(match(kinematics(setup), Convention::MainEq6)).R;
      const OracleResult res =
          integrate_scattering(setup, {setup.step_height(), width},
                               Convention::MainEq6, options);
      record(report, std::abs(res.R_num - closed), "R_num vs R " + where);
      if (res.max_current_drift > 1e-9) {
        report.failures.push_back("current drift " +
                                  sci(res.max_current_drift) + " " +
                                  where);
      }
    } catch (const std::exception& ex) {
      report.failures.push_back(std::string("oracle failed: ") + ex.what() +
                                " " + where);
    }
    ++report.trials;
  }
  return report;
}

SuiteReport limits_suite(std::uint64_t seed, std::size_t trials) {
  SuiteReport report{"limits", 0, 0.0, 1e-12, {}};
  SetupSampler sampler(seed);
  constexpr double m = 1.0;
  const std::vector<double> fit_deltas = {1e-10, 1e-9, 1e-8, 1e-7,
                                          1e-6,  1e-5, 1e-4};
  for (std::size_t i = 0; i < trials; ++i) {
    const double e = sampler.draw_energy();
    const std::string where = "energy=" + std::to_string(e);
    const double a = incident_ratio(e, m);
    const double wall = -4.0 * (e - m);

    const LimitSolution main = impenetrable_limit(e, m, Convention::MainEq6);
    const Spinor psi0 = main.right(0.0);
    record(report, std::abs(psi0.upper) + std::abs(psi0.lower - 2.0 * a),
           "main spinor(0) " + where);
    record(report, relative(*main.external_force, wall),
           "main external force " + where);
    record(report, relative(main.boundary_force, wall),
           "main boundary force " + where);
    if (classify_boundary(main).classification !=
        BoundaryCondition::DirichletUpper) {
      report.failures.push_back("main limit not DirichletUpper " + where);
    }

    const LimitSolution neg =
        impenetrable_limit(e, m, Convention::NegativeEnergyB5);
    const Spinor chi0 = neg.right(0.0);
    record(report, std::abs(chi0.upper - 2.0) + std::abs(chi0.lower),
           "B5 spinor(0) " + where);
    record(report, relative(*neg.external_force, -4.0 * (e + m)),
           "B5 external force " + where);
    record(report, relative(neg.boundary_force, wall),
           "B5 boundary force " + where);
    if (!(std::abs(*neg.external_force - neg.boundary_force) > 1.0)) {
      report.failures.push_back("B5 force discrepancy not reproduced " + where);
    }
    if (classify_boundary(neg).classification !=
        BoundaryCondition::DirichletLower) {
      report.failures.push_back("B5 limit not DirichletLower " + where);
    }

    // Two-sided approach at |delta| = 1e-8. The evanescent side is flat at
    // the wall value; the Klein side approaches as 8 (E - mc^2) a b''.
    const double delta = 1e-8;
    const double both[] = {-delta, delta};
    const auto rows =
        convergence_scan(e, m, Convention::MainEq6, std::span(both));
    record(report, relative(rows[0].force, wall), "evanescent force " + where);
    const double b_dprime = std::sqrt(delta / (2.0 * m + delta));
    const double expected_gap = 8.0 * (e - m) * a * b_dprime;
    const double ratio = (rows[1].force - wall) / expected_gap;
    if (!(std::abs(ratio - 1.0) < 1e-3)) {
      report.failures.push_back("Klein-side approach rate ratio " +
                                sci(ratio) + " " + where);
    }

    const auto fit_rows =
        convergence_scan(e, m, Convention::MainEq6, std::span(fit_deltas));
    const double exponent = fit_transmission_exponent(fit_rows).exponent;
    if (!(std::abs(exponent - 0.5) <= 0.01)) {
      report.failures.push_back("T exponent " + sci(exponent) +
                                " " + where);
    }
    ++report.trials;
  }
  return report;
}

std::string to_json(const SuiteReport& report) {
  nlohmann::ordered_json j;
  j["suite"] = report.suite;
  j["trials"] = report.trials;
  j["max_error"] = report.max_error;
  j["threshold"] = report.threshold;
  j["passed"] = report.passed();
  j["failures"] = report.failures;
  return j.dump(2) + "\n";
}

}  // namespace dirac_step::verify
