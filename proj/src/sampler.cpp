#include "dirac_step/sampler.hpp"

#include <cerrno>
#include <charconv>
#include <cmath>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#ifndef DIRAC_STEP_VERSION
#define DIRAC_STEP_VERSION "dev"
#endif

namespace dirac_step {

namespace {

std::runtime_error io_error(const std::filesystem::path& path,
                            const char* action) {
  return std::runtime_error(path.string() + ": cannot " + action + ": " +
                            std::strerror(errno));
}

double parse_number(std::string_view text) {
  if (text == "nan") return std::nan("");
  double value = 0.0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw std::runtime_error("malformed number in CSV: " + std::string(text));
  }
  return value;
}

}  // namespace

std::string generator_version() {
  return std::string("dirac-step ") + DIRAC_STEP_VERSION;
}

PiecewiseField field_of(const ScatteringSolution& sol) {
  return {[sol](double x) { return evaluate_left(sol, x); },
          [sol](double x) { return evaluate_right(sol, x); }};
}

PiecewiseField field_of(const LimitSolution& lim) {
  return {[lim](double x) { return lim.left(x); },
          [lim](double x) { return lim.right(x); }};
}

GridMetadata metadata_of(const ScatteringSolution& sol) {
  const PhysicalSetup& setup = sol.kinematics.setup;
  return {setup.mass_energy(),
          setup.step_height(),
          setup.energy(),
          std::string(to_string(sol.convention)),
          std::string(to_string(sol.kinematics.regime)),
          generator_version()};
}

GridMetadata metadata_of(const LimitSolution& lim, Convention convention) {
  return {lim.mass_energy,
          lim.step_height,
          lim.energy,
          std::string(to_string(convention)),
          "EdgePoint/" + std::string(to_string(lim.kind)),
          generator_version()};
}

std::vector<double> sample_grid(double x_min, double x_max,
                                std::size_t n_points) {
  if (n_points < 2) throw std::invalid_argument("n_points must be >= 2");
  if (!(x_min < x_max)) throw std::invalid_argument("x_min must be < x_max");
  std::vector<double> xs(n_points);
  const double dx = (x_max - x_min) / static_cast<double>(n_points - 1);
  for (std::size_t i = 0; i < n_points; ++i) {
    xs[i] = x_min + dx * static_cast<double>(i);
  }
  xs.back() = x_max;
  if (x_min <= 0.0 && 0.0 <= x_max) {
    std::size_t nearest = 0;
    for (std::size_t i = 1; i < n_points; ++i) {
      if (std::abs(xs[i]) < std::abs(xs[nearest])) nearest = i;
    }
    xs[nearest] = 0.0;
  }
  return xs;
}

GridSample sample(const PiecewiseField& field, double x_min, double x_max,
                  std::size_t n_points, GridMetadata metadata) {
  GridSample gs{{}, {}, std::move(metadata)};
  for (double x : sample_grid(x_min, x_max, n_points)) {
    if (x == 0.0) {
      gs.xs.push_back(-0.0);
      gs.psi.push_back(field.left(0.0));
      gs.xs.push_back(0.0);
      gs.psi.push_back(field.right(0.0));
    } else {
      gs.xs.push_back(x);
      gs.psi.push_back(x < 0.0 ? field.left(x) : field.right(x));
    }
  }
  return gs;
}

GridSample sample(const ScatteringSolution& sol, double x_min, double x_max,
                  std::size_t n_points) {
  return sample(field_of(sol), x_min, x_max, n_points, metadata_of(sol));
}

GridSample sample(const LimitSolution& lim, Convention convention,
                  double x_min, double x_max, std::size_t n_points) {
  return sample(field_of(lim), x_min, x_max, n_points,
                metadata_of(lim, convention));
}

GridSample sample_oracle(const PhysicalSetup& setup, const SmoothStep& step,
                         Convention convention, double x_min, double x_max,
                         std::size_t n_points, const OracleOptions& options) {
  const std::vector<double> grid = sample_grid(x_min, x_max, n_points);
  const std::vector<Spinor> values =
      oracle_wavefunction(setup, step, convention, grid, options);

  GridSample gs{{},
                {},
                {setup.mass_energy(), setup.step_height(), setup.energy(),
                 std::string(to_string(convention)) + " (oracle)",
                 std::string(to_string(classify_regime(setup))),
                 generator_version()}};
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (grid[i] == 0.0) {
      // continuous profile: both one-sided values coincide
      gs.xs.push_back(-0.0);
      gs.psi.push_back(values[i]);
    }
    gs.xs.push_back(grid[i]);
    gs.psi.push_back(values[i]);
  }
  return gs;
}

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value,
                                       std::chars_format::general, 17);
  if (ec != std::errc()) throw std::logic_error("to_chars failed");
  return std::string(buf, ptr);
}

std::string to_csv(const GridSample& gs) {
  std::string out = kCsvHeader;
  out += '\n';
  for (std::size_t i = 0; i < gs.size(); ++i) {
    const Spinor& s = gs.psi[i];
    const double cols[] = {gs.xs[i],        s.upper.real(), s.upper.imag(),
                           s.lower.real(),  s.lower.imag(), gs.rho(i),
                           gs.j(i)};
    for (std::size_t c = 0; c < std::size(cols); ++c) {
      if (c) out += ',';
      out += format_number(cols[c]);
    }
    out += '\n';
  }
  return out;
}

std::string metadata_json(const GridSample& gs) {
  nlohmann::ordered_json meta;
  meta["mass_energy"] = gs.metadata.mass_energy;
  if (gs.metadata.step_height) {
    meta["step_height"] = *gs.metadata.step_height;
  } else {
    meta["step_height"] = nullptr;
  }
  meta["energy"] = gs.metadata.energy;
  meta["convention"] = gs.metadata.convention;
  meta["regime"] = gs.metadata.regime;
  meta["generator_version"] = gs.metadata.generator_version;
  return meta.dump(2) + "\n";
}

std::filesystem::path metadata_path(const std::filesystem::path& csv_path) {
  std::filesystem::path meta = csv_path;
  meta.replace_extension(".meta.json");
  return meta;
}

void write_text_file(const std::filesystem::path& path,
                     const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw io_error(path, "open for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  out.flush();
  if (!out) throw io_error(path, "write");
}

void write_csv(const GridSample& gs, const std::filesystem::path& path) {
  write_text_file(path, to_csv(gs));
  write_text_file(metadata_path(path), metadata_json(gs));
}

std::vector<CsvRow> read_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io_error(path, "open for reading");
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) {
    throw std::runtime_error(path.string() + ": unexpected CSV header");
  }
  std::vector<CsvRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    double cols[7];
    std::size_t start = 0;
    for (int c = 0; c < 7; ++c) {
      const std::size_t end = line.find(',', start);
      if ((c < 6) == (end == std::string::npos)) {
        throw std::runtime_error(path.string() + ": wrong column count");
      }
      cols[c] = parse_number(std::string_view(line).substr(
          start, end == std::string::npos ? std::string::npos : end - start));
      start = end + 1;
    }
    rows.push_back({cols[0], cols[1], cols[2], cols[3], cols[4], cols[5],
                    cols[6]});
  }
  return rows;
}

}  // namespace dirac_step
