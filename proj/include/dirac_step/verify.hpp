#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "dirac_step/setup.hpp"

namespace dirac_step::verify {

/*!
 * Random setups in units of mc^2 (mass_energy = 1).
 *
 * E/mc^2 is log-uniform on (1 + 1e-3, 1e3). V0 is uniform inside the
 * requested regime; the unbounded Klein zone is capped at 3 (E + mc^2).
 */
class SetupSampler {
 public:
  explicit SetupSampler(std::uint64_t seed) : engine_(seed) {}

  double draw_energy();
  PhysicalSetup draw(Regime regime);

 private:
  double open_unit();
  std::mt19937_64 engine_;
};

struct SuiteReport {
  std::string suite;
  std::size_t trials = 0;
  double max_error = 0.0;
  double threshold = 0.0;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
};

//! |R + T - 1| and continuity at x = 0 for every regime/convention pair.
SuiteReport conservation_suite(std::uint64_t seed, std::size_t trials_per_regime);

//! |R_num - R_closed| on random Klein-zone setups, plus current drift.
SuiteReport oracle_suite(std::uint64_t seed, std::size_t trials, double width,
                         double threshold = 1e-6, double tolerance = 1e-10);

//! Exact edge-point values, the two-sided approach and the T ~ delta^p fit.
SuiteReport limits_suite(std::uint64_t seed, std::size_t trials);

std::string describe(const PhysicalSetup& setup);
std::string to_json(const SuiteReport& report);

}  // namespace dirac_step::verify
