#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace dirac_step::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

struct CliConfig {
  std::string command;
  double mass = 1.0;
  std::optional<double> energy;
  std::optional<double> step_height;
  std::string convention = "main";
  int precision = 10;
  std::string output_dir = ".";

  // sweep
  std::string vary = "step-height";
  double from = 0.0;
  double to = 0.0;
  std::size_t points = 0;
  std::string out;

  // limit / wavefunction
  std::string which = "impenetrable";
  std::string limit;
  std::vector<double> range = {-10.0, 10.0};
  std::optional<double> oracle_width;

  // verify
  std::string suite = "all";
  std::uint64_t seed = 12345;
  std::optional<std::size_t> trials;
  double width = 1e-3;
  double tolerance = 1e-10;
};

//! Runs one CLI invocation. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

//! Convenience for tests: args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace dirac_step::cli
