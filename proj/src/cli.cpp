#include "dirac_step/cli.hpp"

#include <charconv>
#include <cmath>
#include <filesystem>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <variant>

#include <CLI11.hpp>

#include "dirac_step/boundary.hpp"
#include "dirac_step/forces.hpp"
#include "dirac_step/limits.hpp"
#include "dirac_step/observables.hpp"
#include "dirac_step/sampler.hpp"
#include "dirac_step/verify.hpp"

namespace dirac_step::cli {

namespace {

// Thrown for bad parameter combinations that CLI11 cannot catch itself.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Field {
  std::string name;
  std::variant<double, std::string> value;
};

using Row = std::vector<Field>;

std::string show(double value, int precision) {
  if (std::isnan(value)) return "nan";
  std::ostringstream os;
  os << std::setprecision(precision) << value;
  return os.str();
}

std::string show(const Field& f, int precision) {
  if (const auto* d = std::get_if<double>(&f.value)) return show(*d, precision);
  return std::get<std::string>(f.value);
}

std::string csv_cell(const Field& f) {
  if (const auto* d = std::get_if<double>(&f.value)) return format_number(*d);
  return std::get<std::string>(f.value);
}

void print_table(const Row& row, int precision, std::ostream& out) {
  std::size_t width = 0;
  for (const auto& f : row) width = std::max(width, f.name.size());
  for (const auto& f : row) {
    out << std::left << std::setw(static_cast<int>(width)) << f.name << " = "
        << show(f, precision) << "\n";
  }
}

Convention convention_of(const CliConfig& cfg) {
  const auto conv = parse_convention(cfg.convention);
  if (!conv) throw UsageError("unknown convention '" + cfg.convention + "'");
  return *conv;
}

double required(const std::optional<double>& v, const char* flag) {
  if (!v) throw UsageError(std::string("missing ") + flag);
  return *v;
}

void header(const CliConfig& cfg, std::ostream& out,
            const std::vector<std::pair<std::string, std::string>>& params) {
  out << "# " << generator_version() << " " << cfg.command << "\n";
  for (const auto& [key, value] : params) {
    out << "# " << key << " = " << value << "\n";
  }
}

// Shortest round-trip form for the parameter echo.
std::string brief(double value) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

std::string opt(const std::optional<double>& v) {
  return v ? brief(*v) : "unset";
}

void warn_traditional(Convention conv, Regime regime, std::ostream& err) {
  if (conv == Convention::TraditionalB2 && regime == Regime::KleinZone) {
    err << "warning: Klein paradox convention (traditional transmitted wave, "
           "R > 1 and T < 0)\n";
  }
}

Row setup_fields(const PhysicalSetup& s, Regime regime) {
  return {{"energy", s.energy()},
          {"step_height", s.step_height()},
          {"mass_energy", s.mass_energy()},
          {"regime", std::string(to_string(regime))}};
}

// Row at V0 = E + mc^2, filled from the impenetrable limit.
Row edge_point_row(const PhysicalSetup& s, Convention conv) {
  Row row = setup_fields(s, Regime::EdgePoint);
  const double nan = std::nan("");
  if (conv == Convention::TraditionalB2) {
    for (const char* name : {"a", "b_re", "b_im", "k", "kbar_or_kappa", "r_re",
                             "r_im", "t_re", "t_im", "R", "T", "rho0", "j0",
                             "v_t", "force"}) {
      row.push_back({name, nan});
    }
    row.push_back({"boundary", std::string("n/a")});
    return row;
  }
  const LimitSolution lim =
      impenetrable_limit(s.energy(), s.mass_energy(), conv, s.hbar_c());
  const auto waves = lim.left_waves();
  const complex r = waves[1].amplitude().upper / waves[0].amplitude().upper;
  const Spinor psi0 = lim.right(0.0);
  row.insert(row.end(),
             {{"a", lim.a},
              {"b_re", -std::numeric_limits<double>::infinity()},
              {"b_im", 0.0},
              {"k", lim.k},
              {"kbar_or_kappa", 0.0},
              {"r_re", r.real()},
              {"r_im", r.imag()},
              {"t_re", nan},
              {"t_im", nan},
              {"R", lim.R_limit},
              {"T", lim.T_limit},
              {"rho0", density(psi0)},
              {"j0", current(psi0)},
              {"v_t", lim.v_t_limit},
              {"force", lim.external_force.value_or(nan)},
              {"boundary", std::string(to_string(
                               classify_boundary(lim).classification))}});
  return row;
}

Row scatter_row(const PhysicalSetup& s, Convention conv) {
  const Regime regime = classify_regime(s);
  if (regime == Regime::EdgePoint) return edge_point_row(s, conv);
  if (regime == Regime::EdgeLower) {
    throw DomainError(
        "step height equals E - mc^2: kbar = 0 and no transmitted wave is "
        "defined");
  }
  const Kinematics kin = kinematics(s);
  const ScatteringSolution sol = match(kin, conv);
  const ObservableSet obs = coefficients(sol);
  Row row = setup_fields(s, regime);
  row.insert(row.end(),
             {{"a", kin.a},
              {"b_re", kin.b.real()},
              {"b_im", kin.b.imag()},
              {"k", kin.k},
              {"kbar_or_kappa", kin.kbar_or_kappa},
              {"r_re", sol.r.real()},
              {"r_im", sol.r.imag()},
              {"t_re", sol.t.real()},
              {"t_im", sol.t.imag()},
              {"R", obs.R},
              {"T", obs.T},
              {"rho0", obs.rho0},
              {"j0", obs.j0},
              {"v_t", obs.v_t.value_or(std::nan(""))},
              {"force", external_force_mean(sol)},
              {"boundary", std::string(to_string(
                               classify_boundary(sol).classification))}});
  return row;
}

int cmd_scatter(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  const Convention conv = convention_of(cfg);
  const PhysicalSetup setup(cfg.mass, required(cfg.step_height, "--step-height"),
                            required(cfg.energy, "--energy"));
  header(cfg, out,
         {{"mass", brief(cfg.mass)},
          {"energy", opt(cfg.energy)},
          {"step_height", opt(cfg.step_height)},
          {"convention", std::string(to_string(conv))},
          {"precision", std::to_string(cfg.precision)}});
  const Regime regime = classify_regime(setup);
  warn_traditional(conv, regime, err);
  const Row row = scatter_row(setup, conv);
  if (regime == Regime::EdgePoint) {
    out << "# edge point: values from the impenetrable limit\n";
  }
  print_table(row, cfg.precision, out);
  return kExitOk;
}

std::vector<double> linspace(double from, double to, std::size_t n) {
  std::vector<double> xs(n);
  if (n == 1) {
    xs[0] = from;
    return xs;
  }
  for (std::size_t i = 0; i < n; ++i) {
    const double f = static_cast<double>(i) / static_cast<double>(n - 1);
    xs[i] = i + 1 == n ? to : from + (to - from) * f;
  }
  return xs;
}

int cmd_sweep(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  const Convention conv = convention_of(cfg);
  const bool vary_height = cfg.vary == "step-height";
  if (!vary_height && cfg.vary != "energy") {
    throw UsageError("--vary must be step-height or energy");
  }
  if (cfg.points < 1) throw UsageError("--points must be at least 1");
  if (!std::isfinite(cfg.from) || !std::isfinite(cfg.to)) {
    throw UsageError("--from and --to must be finite");
  }
  const double fixed = vary_height ? required(cfg.energy, "--energy")
                                   : required(cfg.step_height, "--step-height");
  header(cfg, out,
         {{"mass", brief(cfg.mass)},
          {vary_height ? "energy" : "step_height", brief(fixed)},
          {"vary", cfg.vary},
          {"from", brief(cfg.from)},
          {"to", brief(cfg.to)},
          {"points", std::to_string(cfg.points)},
          {"convention", std::string(to_string(conv))},
          {"out", cfg.out}});

  std::vector<Row> rows;
  std::size_t skipped = 0;
  for (double value : linspace(cfg.from, cfg.to, cfg.points)) {
    try {
      const PhysicalSetup setup = vary_height
                                      ? PhysicalSetup(cfg.mass, value, fixed)
                                      : PhysicalSetup(cfg.mass, fixed, value);
      const Regime regime = classify_regime(setup);
      if (regime == Regime::EdgeLower) {
        Row row = setup_fields(setup, regime);
        for (const char* name :
             {"a", "b_re", "b_im", "k", "kbar_or_kappa", "r_re", "r_im", "t_re",
              "t_im", "R", "T", "rho0", "j0", "v_t", "force"}) {
          row.push_back({name, std::nan("")});
        }
        row.push_back({"boundary", std::string("n/a")});
        rows.push_back(std::move(row));
      } else {
        rows.push_back(scatter_row(setup, conv));
      }
    } catch (const std::invalid_argument&) {
      ++skipped;
    } catch (const std::domain_error&) {
      ++skipped;
    }
  }
  if (rows.empty()) throw UsageError("no valid points in the sweep range");
  if (skipped > 0) err << "skipped " << skipped << " invalid point(s)\n";

  std::ostringstream csv;
  const auto regime_of = [](const Row& row) {
    return std::get<std::string>(row[3].value);
  };
  for (std::size_t i = 0; i < rows[0].size(); ++i) {
    csv << rows[0][i].name << ",";
  }
  csv << "regime_change\n";
  bool any_klein = false;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (const auto& f : rows[r]) csv << csv_cell(f) << ",";
    const bool change = r > 0 && regime_of(rows[r]) != regime_of(rows[r - 1]);
    csv << (change ? 1 : 0) << "\n";
    any_klein = any_klein || regime_of(rows[r]) == "KleinZone";
  }
  if (any_klein) {
    warn_traditional(conv, Regime::KleinZone, err);
  }
  write_text_file(cfg.out, csv.str());
  out << "wrote " << rows.size() << " rows to " << cfg.out << "\n";
  return kExitOk;
}

int cmd_limit(const CliConfig& cfg, std::ostream& out, std::ostream&) {
  const Convention conv = convention_of(cfg);
  const double energy = required(cfg.energy, "--energy");
  header(cfg, out,
         {{"mass", brief(cfg.mass)},
          {"energy", brief(energy)},
          {"which", cfg.which},
          {"convention", std::string(to_string(conv))},
          {"precision", std::to_string(cfg.precision)}});
  const int p = cfg.precision;
  Row row;
  if (cfg.which == "infinite") {
    const InfiniteStepLimit lim = infinite_step_limit(energy, cfg.mass);
    row = {{"a", lim.a},     {"b", lim.b},       {"r_re", lim.r.real()},
           {"r_im", lim.r.imag()}, {"t_re", lim.t.real()},
           {"t_im", lim.t.imag()}, {"R", lim.R},  {"T", lim.T}};
    print_table(row, p, out);
    return kExitOk;
  }
  if (cfg.which == "impenetrable") {
    if (conv == Convention::TraditionalB2) {
      throw UsageError(
          "the traditional convention has no impenetrable limit solution");
    }
    const LimitSolution lim = impenetrable_limit(energy, cfg.mass, conv);
    const Spinor psi0 = lim.right(0.0);
    const double external = *lim.external_force;
    row = {{"kind", std::string(to_string(lim.kind))},
           {"step_height", lim.step_height},
           {"a", lim.a},
           {"k", lim.k},
           {"phi0_re", psi0.upper.real()},
           {"phi0_im", psi0.upper.imag()},
           {"chi0_re", psi0.lower.real()},
           {"chi0_im", psi0.lower.imag()},
           {"rho0", density(psi0)},
           {"boundary",
            std::string(to_string(classify_boundary(lim).classification))},
           {"R", lim.R_limit},
           {"T", lim.T_limit},
           {"v_t", lim.v_t_limit},
           {"force_external", external},
           {"force_boundary", lim.boundary_force}};
    const double gap = std::abs(external - lim.boundary_force);
    const double scale = std::max(std::abs(external), 1.0);
    row.push_back({"discrepancy", std::string(gap > 1e-12 * scale
                                                  ? "yes (external != boundary)"
                                                  : "no")});
    print_table(row, p, out);
    return kExitOk;
  }
  if (cfg.which == "nonrel") {
    if (conv == Convention::TraditionalB2) {
      throw UsageError(
          "the traditional convention has no nonrelativistic limit solution");
    }
    const double kinetic = energy - cfg.mass;
    const LimitKind kind = conv == Convention::NegativeEnergyB5
                               ? LimitKind::NonRelB
                               : LimitKind::NonRelMain;
    const LimitSolution lim = nonrelativistic_limit(kinetic, cfg.mass, kind);
    const LimitSolution rel = impenetrable_limit(energy, cfg.mass, conv);
    row = {{"kind", std::string(to_string(lim.kind))},
           {"kinetic_energy", kinetic},
           {"a_nonrel", lim.a},
           {"a_exact", incident_ratio(energy, cfg.mass)},
           {"k", lim.k},
           {"psi0_re", lim.psi_nr(0.0).real()},
           {"psi0_im", lim.psi_nr(0.0).imag()},
           {"psi_x0_re", lim.psi_nr_dx(0.0).real()},
           {"psi_x0_im", lim.psi_nr_dx(0.0).imag()},
           {"boundary",
            std::string(to_string(classify_boundary(lim).classification))},
           {"force_external", lim.external_force.value_or(std::nan(""))},
           {"force_boundary", lim.boundary_force},
           {"force_reference", -4.0 * kinetic},
           {"force_relativistic", rel.boundary_force}};
    print_table(row, p, out);
    return kExitOk;
  }
  throw UsageError("--which must be impenetrable, nonrel or infinite");
}

int cmd_verify(const CliConfig& cfg, std::ostream& out, std::ostream&) {
  const std::vector<std::string> all = {"conservation", "closed-vs-oracle",
                                        "limits"};
  std::vector<std::string> suites;
  if (cfg.suite == "all") {
    suites = all;
  } else if (std::find(all.begin(), all.end(), cfg.suite) != all.end()) {
    suites = {cfg.suite};
  } else {
    throw UsageError("unknown suite '" + cfg.suite + "'");
  }
  if (!(cfg.width > 0.0)) throw UsageError("--width must be positive");
  header(cfg, out,
         {{"suite", cfg.suite},
          {"seed", std::to_string(cfg.seed)},
          {"trials", cfg.trials ? std::to_string(*cfg.trials) : "default"},
          {"width", brief(cfg.width)},
          {"tolerance", brief(cfg.tolerance)},
          {"output_dir", cfg.output_dir}});
  std::filesystem::create_directories(cfg.output_dir);

  bool ok = true;
  for (const auto& name : suites) {
    verify::SuiteReport report;
    if (name == "conservation") {
      report = verify::conservation_suite(cfg.seed, cfg.trials.value_or(1000));
    } else if (name == "closed-vs-oracle") {
      report = verify::oracle_suite(cfg.seed, cfg.trials.value_or(20),
                                    cfg.width, 1e-6, cfg.tolerance);
    } else {
      report = verify::limits_suite(cfg.seed, cfg.trials.value_or(100));
    }
    const auto path =
        std::filesystem::path(cfg.output_dir) / ("verify-" + name + ".json");
    write_text_file(path, verify::to_json(report));
    out << name << ": " << (report.passed() ? "PASS" : "FAIL")
        << " trials=" << report.trials
        << " max_error=" << show(report.max_error, 3)
        << " threshold=" << show(report.threshold, 3) << "\n";
    for (const auto& f : report.failures) out << "  " << f << "\n";
    ok = ok && report.passed();
  }
  return ok ? kExitOk : kExitVerifyFailed;
}

int cmd_wavefunction(const CliConfig& cfg, std::ostream& out,
                     std::ostream& err) {
  const Convention conv = convention_of(cfg);
  const double energy = required(cfg.energy, "--energy");
  if (cfg.range.size() != 2 || !(cfg.range[0] < cfg.range[1])) {
    throw UsageError("--range needs two values xmin < xmax");
  }
  if (cfg.points < 2) throw UsageError("--points must be at least 2");
  if (cfg.step_height.has_value() == !cfg.limit.empty()) {
    throw UsageError("give exactly one of --step-height and --limit");
  }
  header(cfg, out,
         {{"mass", brief(cfg.mass)},
          {"energy", brief(energy)},
          {"step_height", opt(cfg.step_height)},
          {"limit", cfg.limit.empty() ? "none" : cfg.limit},
          {"convention", std::string(to_string(conv))},
          {"range", brief(cfg.range[0]) + " " +
                        brief(cfg.range[1])},
          {"points", std::to_string(cfg.points)},
          {"oracle_width", opt(cfg.oracle_width)},
          {"out", cfg.out}});

  const double lo = cfg.range[0];
  const double hi = cfg.range[1];
  GridSample gs;
  if (!cfg.limit.empty()) {
    if (cfg.limit == "impenetrable") {
      if (conv == Convention::TraditionalB2) {
        throw UsageError(
            "the traditional convention has no impenetrable limit solution");
      }
      gs = sample(impenetrable_limit(energy, cfg.mass, conv), conv, lo, hi,
                  cfg.points);
    } else if (cfg.limit == "nonrel") {
      const LimitKind kind = conv == Convention::NegativeEnergyB5
                                 ? LimitKind::NonRelB
                                 : LimitKind::NonRelMain;
      gs = sample(nonrelativistic_limit(energy - cfg.mass, cfg.mass, kind),
                  conv, lo, hi, cfg.points);
    } else {
      throw UsageError("--limit must be impenetrable or nonrel");
    }
  } else {
    const PhysicalSetup setup(cfg.mass, *cfg.step_height, energy);
    warn_traditional(conv, classify_regime(setup), err);
    if (cfg.oracle_width) {
      gs = sample_oracle(setup, {setup.step_height(), *cfg.oracle_width}, conv,
                         lo, hi, cfg.points);
    } else {
      gs = sample(match(kinematics(setup), conv), lo, hi, cfg.points);
    }
  }
  write_csv(gs, cfg.out);
  out << "wrote " << gs.size() << " rows to " << cfg.out << "\n";
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CliConfig cfg;
  CLI::App app{"Dirac particle scattering off a potential step", "dirac-step"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(DIRAC_STEP_VERSION));

  const auto physics = [&cfg](CLI::App* sub) {
    sub->add_option("--mass", cfg.mass, "rest energy mc^2 (0 for massless)")
        ->capture_default_str();
    sub->add_option("--energy", cfg.energy, "total energy E");
    sub->add_option("--convention", cfg.convention,
                    "main, lower, traditional or b5")
        ->capture_default_str();
    sub->add_option("--precision", cfg.precision, "digits in tables")
        ->capture_default_str()
        ->check(CLI::Range(1, 17));
  };

  auto* scatter = app.add_subcommand("scatter", "coefficients for one setup");
  physics(scatter);
  scatter->add_option("--step-height", cfg.step_height, "step height V0")
      ->required();
  scatter->get_option("--energy")->required();

  auto* sweep = app.add_subcommand("sweep", "scan V0 or E and write a CSV");
  physics(sweep);
  sweep->add_option("--step-height", cfg.step_height, "fixed V0");
  sweep->add_option("--vary", cfg.vary, "step-height or energy")
      ->capture_default_str();
  sweep->add_option("--from", cfg.from)->required();
  sweep->add_option("--to", cfg.to)->required();
  sweep->add_option("--points", cfg.points)->required();
  sweep->add_option("--out", cfg.out)->required();

  auto* limit = app.add_subcommand("limit", "closed-form limit solutions");
  physics(limit);
  limit->get_option("--energy")->required();
  limit->add_option("--which", cfg.which, "impenetrable, nonrel or infinite")
      ->capture_default_str();

  auto* verify = app.add_subcommand("verify", "randomized property suites");
  verify->add_option("--suite", cfg.suite,
                     "conservation, closed-vs-oracle, limits or all")
      ->capture_default_str();
  verify->add_option("--seed", cfg.seed)->capture_default_str();
  verify->add_option("--trials", cfg.trials, "trials per suite");
  verify->add_option("--output-dir", cfg.output_dir)->capture_default_str();
  verify->add_option("--width", cfg.width, "oracle step width")
      ->capture_default_str();
  verify->add_option("--tolerance", cfg.tolerance, "oracle integration tolerance")
      ->capture_default_str();

  auto* wave = app.add_subcommand("wavefunction", "sample psi(x) to a CSV");
  physics(wave);
  wave->get_option("--energy")->required();
  wave->add_option("--step-height", cfg.step_height, "step height V0");
  wave->add_option("--limit", cfg.limit, "impenetrable or nonrel");
  wave->add_option("--range", cfg.range, "xmin xmax")->expected(2);
  wave->add_option("--points", cfg.points)->required();
  wave->add_option("--out", cfg.out)->required();
  wave->add_option("--oracle-width", cfg.oracle_width,
                   "sample the numerical oracle with this step width");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    out << (e.get_name() == "CallForVersion" ? std::string(e.what()) + "\n"
                                             : app.help());
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (scatter->parsed()) {
      cfg.command = "scatter";
      return cmd_scatter(cfg, out, err);
    }
    if (sweep->parsed()) {
      cfg.command = "sweep";
      return cmd_sweep(cfg, out, err);
    }
    if (limit->parsed()) {
      cfg.command = "limit";
      return cmd_limit(cfg, out, err);
    }
    if (verify->parsed()) {
      cfg.command = "verify";
      return cmd_verify(cfg, out, err);
    }
    cfg.command = "wavefunction";
    return cmd_wavefunction(cfg, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  std::vector<const char*> argv = {"dirac-step"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace dirac_step::cli
