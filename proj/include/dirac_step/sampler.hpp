#pragma once

#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dirac_step/limits.hpp"
#include "dirac_step/matcher.hpp"
#include "dirac_step/oracle.hpp"

namespace dirac_step {

struct GridMetadata {
  double mass_energy;
  std::optional<double> step_height;
  double energy;
  std::string convention;
  std::string regime;
  std::string generator_version;
};

/*!
 * A solution sampled on a grid.
 *
 * When the range contains the origin, x = 0 appears twice: first as -0.0 with
 * the left-branch value, then as +0.0 with the right-branch value. rho and j
 * are recomputed from the components on demand.
 */
struct GridSample {
  std::vector<double> xs;
  std::vector<Spinor> psi;
  GridMetadata metadata;

  std::size_t size() const { return xs.size(); }
  double rho(std::size_t i) const { return density(psi[i]); }
  double j(std::size_t i) const { return current(psi[i]); }
};

struct PiecewiseField {
  std::function<Spinor(double)> left;
  std::function<Spinor(double)> right;
};

std::string generator_version();

PiecewiseField field_of(const ScatteringSolution& sol);
PiecewiseField field_of(const LimitSolution& lim);

GridMetadata metadata_of(const ScatteringSolution& sol);
GridMetadata metadata_of(const LimitSolution& lim, Convention convention);

//! n_points >= 2, x_min < x_max. The grid point nearest 0 is snapped to 0.
std::vector<double> sample_grid(double x_min, double x_max,
                                std::size_t n_points);

GridSample sample(const PiecewiseField& field, double x_min, double x_max,
                  std::size_t n_points, GridMetadata metadata);
GridSample sample(const ScatteringSolution& sol, double x_min, double x_max,
                  std::size_t n_points);
GridSample sample(const LimitSolution& lim, Convention convention,
                  double x_min, double x_max, std::size_t n_points);
//! The range must lie inside the oracle's [-L, L].
GridSample sample_oracle(const PhysicalSetup& setup, const SmoothStep& step,
                         Convention convention, double x_min, double x_max,
                         std::size_t n_points,
                         const OracleOptions& options = {});

//! Shortest form that round-trips is not used; always 17 significant digits.
std::string format_number(double value);

inline constexpr const char* kCsvHeader = "x,phi_re,phi_im,chi_re,chi_im,rho,j";

std::string to_csv(const GridSample& gs);
std::string metadata_json(const GridSample& gs);
//! foo/bar.csv -> foo/bar.meta.json
std::filesystem::path metadata_path(const std::filesystem::path& csv_path);

//! Writes the CSV and its .meta.json sidecar. Throws std::runtime_error
//! naming the path and the OS error.
void write_csv(const GridSample& gs, const std::filesystem::path& path);

struct CsvRow {
  double x, phi_re, phi_im, chi_re, chi_im, rho, j;
};

std::vector<CsvRow> read_csv(const std::filesystem::path& path);

//! Write text to a file, replacing it. Same error contract as write_csv.
void write_text_file(const std::filesystem::path& path,
                     const std::string& text);

}  // namespace dirac_step
