#include "oudesign/cli/cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "fetch.hpp"
#include "oudesign/cli/manifest.hpp"
#include "oudesign/entropy.hpp"
#include "oudesign/errors.hpp"
#include "oudesign/imspe.hpp"
#include "oudesign/optimize.hpp"
#include "oudesign/polar_data.hpp"
#include "oudesign/profiles.hpp"
#include "oudesign/quadrature.hpp"
#include "oudesign/report_io.hpp"
#include "oudesign/simulate.hpp"

namespace oudesign::cli {
namespace {

constexpr std::uint64_t kDefaultSeed = 42;

struct Common {
  std::string out_path;
  std::string manifest_path;
};

struct ModelFlags {
  double lambda = 0.0;
  double omega = 0.0;
  std::optional<double> sigma;

  OuParams params() const {
    return sigma ? OuParams::with_sigma(lambda, omega, *sigma) : OuParams::normalized(lambda, omega);
  }
};

struct DesignFlags {
  std::optional<std::size_t> n;
  std::vector<double> points;

  Design design() const {
    if (!points.empty()) return Design::from_points(points);
    if (!n) throw ArgumentError("either --n or --design is required");
    return Design::equispaced(*n);
  }
};

struct Output {
  std::string content;
  std::optional<std::uint64_t> seed;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--out", c.out_path, "Write output to this file instead of stdout");
  cmd->add_option("--manifest", c.manifest_path,
                  "Manifest path (default <out>.manifest.json; stderr when writing to stdout)");
}

void add_model(CLI::App* cmd, ModelFlags& m, bool required = true) {
  auto* l = cmd->add_option("--lambda", m.lambda, "Decay rate lambda > 0");
  auto* w = cmd->add_option("--omega", m.omega, "Angular frequency omega");
  if (required) {
    l->required();
    w->required();
  }
  cmd->add_option("--sigma", m.sigma, "Noise scale (default: normalized, sigma^2 = 2 lambda)");
}

void add_design(CLI::App* cmd, DesignFlags& d) {
  auto* n = cmd->add_option("--n", d.n, "Equispaced design size");
  auto* p = cmd->add_option("--design", d.points, "Comma-separated design points on [0, 1]")
                ->delimiter(',');
  n->excludes(p);
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("OU_DESIGN_SEED"); env && *env) {
    std::uint64_t v = 0;
    const char* end = env + std::char_traits<char>::length(env);
    const auto [ptr, ec] = std::from_chars(env, end, v);
    if (ec != std::errc() || ptr != end) throw ArgumentError("OU_DESIGN_SEED is not an unsigned integer");
    return v;
  }
  return kDefaultSeed;
}

std::string joined_points(std::span<const double> v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += io::format_number(v[i]);
  }
  return s;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ArgumentError("cannot open output file: " + path);
  f << content;
  if (!f) throw ArgumentError("cannot write output file: " + path);
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ArgumentError("cannot open input file: " + path);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

// --- commands ---------------------------------------------------------------

struct ImspeCmd {
  DesignFlags design;
  ModelFlags model;
  bool oracle = false;
  bool json = false;
  double tol = 1e-10;

  Output run() const {
    const auto d = design.design();
    const auto p = model.params();
    const auto b = imspe_closed(d, p);
    std::optional<QuadratureResult> q;
    if (oracle) q = imspe_quadrature(d, p, {.tol = tol});
    if (json) return {io::imspe_json(d, p, b, q), std::nullopt};
    std::ostringstream s;
    s << "design " << joined_points(d.points()) << '\n'
      << "G " << io::format_number(b.G) << '\n'
      << "A_n " << io::format_number(b.A_n) << '\n'
      << "B_n " << io::format_number(b.B_n) << '\n'
      << "imspe " << io::format_number(b.value) << '\n';
    if (q) {
      s << "quadrature " << io::format_number(q->value) << '\n'
        << "relative_gap " << io::format_number(std::abs(b.value - q->value) / b.value) << '\n';
    }
    return {s.str(), std::nullopt};
  }
};

struct EntropyCmd {
  DesignFlags design;
  ModelFlags model;
  bool json = false;

  Output run(std::ostream& err) const {
    const auto d = design.design();
    const auto p = model.params();
    if (printed_form_undefined(d, p)) {
      err << "warning: some gap is <= ln 2 / (2 lambda); the product of (1 - 2 pi^2) factors is "
             "not positive there (reported as undefined)\n";
    }
    const auto e = entropy(d, p);
    const auto a = arbitrate_determinant(d, p);
    if (json) return {io::entropy_json(d, p, e, a), std::nullopt};
    std::ostringstream s;
    s << "design " << joined_points(d.points()) << '\n'
      << "logdet " << io::format_number(e.logdet) << '\n'
      << "entropy " << io::format_number(e.value) << '\n';
    return {s.str(), std::nullopt};
  }
};

struct OptimizeCmd {
  std::size_t n = 0;
  ModelFlags model;
  std::string criterion = "imspe";
  std::size_t starts = OptimizerConfig{}.n_starts;
  std::size_t max_iters = OptimizerConfig{}.max_iters;
  std::optional<std::uint64_t> seed;
  bool json = false;

  Output run() const {
    OptimizerConfig c;
    c.criterion = parse_criterion(criterion);
    c.n_starts = starts;
    c.max_iters = max_iters;
    c.seed = resolve_seed(seed);
    const auto p = model.params();
    const auto r = optimize_design(n, p, c);
    if (json) return {io::optimization_json(p, c.criterion, r), c.seed};
    std::ostringstream s;
    s << "design " << joined_points(r.design.points()) << '\n'
      << "value " << io::format_number(r.value) << '\n';
    return {s.str(), c.seed};
  }
};

struct EfficiencyTableCmd {
  std::size_t starts = OptimizerConfig{}.n_starts;
  std::optional<std::uint64_t> seed;
  double tolerance_pp = 1.0;
  std::string report_path;

  std::vector<io::EfficiencyRow> rows(std::uint64_t s) const {
    OptimizerConfig c;
    c.n_starts = starts;
    c.seed = s;
    std::vector<io::EfficiencyRow> out;
    for (const auto& cell : reference_efficiency_cells()) {
      out.push_back({efficiency_report(cell.n, OuParams::normalized(cell.lambda, cell.omega), c), cell});
    }
    return out;
  }
};

struct ProfileCmd {
  DesignFlags design;
  ModelFlags model;
  std::size_t grid = 101;

  Output run() const {
    return {io::profile_csv(mspe_profile(design.design(), model.params(), grid)), std::nullopt};
  }
};

struct SurfaceCmd {
  std::string kind = "lambda-omega";
  std::size_t n = 3;
  double lambda_min = 0.5, lambda_max = 5.0;
  double omega_min = -6.0, omega_max = 6.0;
  std::size_t lambda_count = 46, omega_count = 49;
  ModelFlags model;
  std::size_t d_count = 49, x_count = 101, steps = 100;

  Output run() const {
    if (kind == "lambda-omega") {
      return {io::surface_csv(imspe_surface(n, linspace(lambda_min, lambda_max, lambda_count),
                                            linspace(omega_min, omega_max, omega_count))),
              std::nullopt};
    }
    if (model.lambda <= 0.0) throw ArgumentError("--lambda is required for --kind " + kind);
    if (kind == "x-d") {
      if (d_count < 1) throw ArgumentError("--d-count must be >= 1");
      std::vector<double> ds;
      for (std::size_t k = 1; k <= d_count; ++k)
        ds.push_back(static_cast<double>(k) / static_cast<double>(d_count + 1));
      return {io::xd_surface_csv(mspe_xd_surface(model.params(), ds, linspace(0.0, 1.0, x_count))),
              std::nullopt};
    }
    if (kind == "d-sweep") {
      return {io::sweep_csv(imspe_three_point_sweep(model.params(), steps)), std::nullopt};
    }
    throw ArgumentError("--kind must be lambda-omega, x-d or d-sweep");
  }
};

struct SimulateCmd {
  ModelFlags model;
  double m1 = 0.0, m2 = 0.0;
  double start = 0.0, dt = 0.05;
  std::size_t samples = 2000, paths = 1;
  std::optional<std::uint64_t> seed;

  Output run() const {
    const auto s = resolve_seed(seed);
    const auto p = model.params().with_trend(m1, m2);
    const auto t = regular_times(start, dt, samples);
    return {io::paths_csv(simulate(p, t, s, paths)), s};
  }
};

struct EstimateCmd {
  std::string input;
  std::string freq_preset = "annual";
  std::optional<double> cycles_per_year;
  std::optional<double> dt;
  bool subset = false;
  std::vector<std::size_t> columns{0, 1, 3};
  std::string residuals_path;

  double frequency() const {
    if (cycles_per_year) return *cycles_per_year;
    if (freq_preset == "annual") return kAnnualCyclesPerYear;
    if (freq_preset == "chandler") return kChandlerCyclesPerYear;
    if (freq_preset == "none") return 0.0;
    throw ArgumentError("--freq-preset must be annual, chandler or none");
  }

  Output run(RunManifest& manifest) const {
    if (columns.size() != 3) throw ArgumentError("--columns needs epoch,x,y indices");
    std::istringstream in(read_file(input));
    auto parsed = parse_eop(in, {columns[0], columns[1], columns[2]});
    auto series = std::move(parsed.series);
    const double step = dt ? *dt : median_spacing(series);
    if (subset) series = regular_subset(series, step);
    const double f = frequency();
    const auto fit = fit_trend(series, f);
    auto est = estimate_ou(fit.residuals, step);
    est.m_hat = fit.m_hat;
    est.mean_hat = fit.mean_hat;
    if (!residuals_path.empty()) {
      const auto csv = io::series_csv(fit.residuals);
      write_file(residuals_path, csv);
      manifest.add_output(residuals_path, csv);
    }
    return {io::estimation_json(est, f, step), std::nullopt};
  }
};

struct FetchCmd {
  std::string url;
  int timeout_s = 60;
};

int exit_code_for(const std::exception_ptr& e, std::ostream& err) {
  try {
    std::rethrow_exception(e);
  } catch (const ConvergenceError& x) {
    err << "error: " << x.what() << '\n';
    return kExitConvergence;
  } catch (const FormatError& x) {
    err << "error: " << x.what() << '\n';
    return kExitFormat;
  } catch (const EstimationError& x) {
    err << "error: " << x.what() << '\n';
    return kExitFormat;
  } catch (const DegeneracyError& x) {
    err << "error: " << x.what() << '\n';
    return kExitFormat;
  } catch (const FetchError& x) {
    err << "error: " << x.what() << '\n';
    return kExitFormat;
  } catch (const std::exception& x) {
    err << "error: " << x.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  const auto t0 = std::chrono::steady_clock::now();
  CLI::App app{"Optimal sampling designs for the complex Ornstein-Uhlenbeck process",
               "oudesign"};
  app.set_version_flag("--version", std::string(OUDESIGN_VERSION));
  app.require_subcommand(1);
  Common common;

  ImspeCmd imspe;
  auto* c_imspe = app.add_subcommand("imspe", "IMSPE of a design (closed form)");
  add_design(c_imspe, imspe.design);
  add_model(c_imspe, imspe.model);
  c_imspe->add_flag("--oracle", imspe.oracle, "Also integrate the MSPE numerically");
  c_imspe->add_option("--tol", imspe.tol, "Quadrature tolerance")->capture_default_str();
  c_imspe->add_flag("--json", imspe.json, "JSON output");
  add_common(c_imspe, common);

  EntropyCmd ent;
  auto* c_ent = app.add_subcommand("entropy", "Entropy of the observations at a design");
  add_design(c_ent, ent.design);
  add_model(c_ent, ent.model);
  c_ent->add_flag("--json", ent.json, "JSON output");
  add_common(c_ent, common);

  OptimizeCmd opt;
  auto* c_opt = app.add_subcommand("optimize", "Optimal n-point design");
  c_opt->add_option("--n", opt.n, "Design size")->required();
  add_model(c_opt, opt.model);
  c_opt->add_option("--criterion", opt.criterion, "imspe or entropy")->capture_default_str();
  c_opt->add_option("--starts", opt.starts, "Number of Nelder-Mead starts")->capture_default_str();
  c_opt->add_option("--max-iters", opt.max_iters, "Iterations per start")->capture_default_str();
  c_opt->add_option("--seed", opt.seed, "Seed (default $OU_DESIGN_SEED or 42)");
  c_opt->add_flag("--json", opt.json, "JSON output with per-start trace");
  add_common(c_opt, common);

  EfficiencyTableCmd table;
  auto* c_table = app.add_subcommand(
      "table1", "Relative efficiency of equispaced designs for the 2015-2017 polar-motion fits");
  c_table->add_option("--starts", table.starts, "Number of Nelder-Mead starts")->capture_default_str();
  c_table->add_option("--seed", table.seed, "Seed (default $OU_DESIGN_SEED or 42)");
  c_table->add_option("--tolerance", table.tolerance_pp, "Agreement tolerance in percentage points")
      ->capture_default_str();
  c_table->add_option("--report", table.report_path, "Write the discrepancy report JSON here");
  add_common(c_table, common);

  ProfileCmd prof;
  auto* c_prof = app.add_subcommand("profile", "MSPE along [0, 1] for a design (CSV)");
  add_design(c_prof, prof.design);
  add_model(c_prof, prof.model);
  c_prof->add_option("--grid", prof.grid, "Uniform grid size")->capture_default_str();
  add_common(c_prof, common);

  SurfaceCmd surf;
  auto* c_surf = app.add_subcommand("surface", "IMSPE/MSPE surfaces (CSV)");
  c_surf->add_option("--kind", surf.kind, "lambda-omega, x-d or d-sweep")->capture_default_str();
  c_surf->add_option("--n", surf.n, "Equispaced design size (lambda-omega)")->capture_default_str();
  c_surf->add_option("--lambda-min", surf.lambda_min)->capture_default_str();
  c_surf->add_option("--lambda-max", surf.lambda_max)->capture_default_str();
  c_surf->add_option("--lambda-count", surf.lambda_count)->capture_default_str();
  c_surf->add_option("--omega-min", surf.omega_min)->capture_default_str();
  c_surf->add_option("--omega-max", surf.omega_max)->capture_default_str();
  c_surf->add_option("--omega-count", surf.omega_count)->capture_default_str();
  add_model(c_surf, surf.model, false);
  c_surf->add_option("--d-count", surf.d_count, "Interior d values (x-d)")->capture_default_str();
  c_surf->add_option("--x-count", surf.x_count, "x grid size (x-d)")->capture_default_str();
  c_surf->add_option("--steps", surf.steps, "d = k / steps (d-sweep)")->capture_default_str();
  add_common(c_surf, common);

  SimulateCmd sim;
  auto* c_sim = app.add_subcommand("simulate", "Sample paths on a regular grid (CSV)");
  add_model(c_sim, sim.model);
  c_sim->add_option("--m1", sim.m1, "Trend, first coordinate")->capture_default_str();
  c_sim->add_option("--m2", sim.m2, "Trend, second coordinate")->capture_default_str();
  c_sim->add_option("--start", sim.start, "First sample time")->capture_default_str();
  c_sim->add_option("--dt", sim.dt, "Sample spacing")->capture_default_str();
  c_sim->add_option("--samples", sim.samples, "Samples per path")->capture_default_str();
  c_sim->add_option("--paths", sim.paths, "Number of paths")->capture_default_str();
  c_sim->add_option("--seed", sim.seed, "Seed (default $OU_DESIGN_SEED or 42)");
  add_common(c_sim, common);

  EstimateCmd est;
  auto* c_est = app.add_subcommand("estimate", "Fit trend and OU parameters to pole coordinates");
  c_est->add_option("--input", est.input, "EOP C01-style text file")->required();
  c_est->add_option("--freq-preset", est.freq_preset, "annual, chandler or none")
      ->capture_default_str();
  c_est->add_option("--cycles-per-year", est.cycles_per_year, "Trend frequency (overrides preset)");
  c_est->add_option("--dt", est.dt, "Sample spacing in years (default: median spacing)");
  c_est->add_flag("--subset", est.subset, "Keep only samples on the regular dt grid");
  c_est->add_option("--columns", est.columns, "0-based epoch,x,y columns")
      ->delimiter(',')
      ->expected(3);
  c_est->add_option("--residuals", est.residuals_path, "Write trend residuals CSV here");
  add_common(c_est, common);

  FetchCmd fetch;
  auto* c_fetch = app.add_subcommand("fetch", "Download a pole-coordinate file");
  c_fetch->add_option("--url", fetch.url, "http(s) URL")->required();
  c_fetch->add_option("--timeout", fetch.timeout_s, "Seconds")->capture_default_str();
  add_common(c_fetch, common);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  CLI::App* cmd = app.get_subcommands().front();
  RunManifest manifest;
  manifest.command = cmd->get_name();
  manifest.args = args;
  std::ostringstream params;
  for (const CLI::Option* o : cmd->get_options()) {
    if (o->get_name() == "--help" || o->get_name().empty()) continue;
    std::string name = o->get_name();
    name.erase(0, name.find_first_not_of('-'));
    const auto results = o->results();
    std::string value;
    if (!results.empty()) {
      for (std::size_t i = 0; i < results.size(); ++i) value += (i ? "," : "") + results[i];
    } else {
      value = o->get_default_str();
    }
    params << name << '=' << value << '\n';
  }
  manifest.parameters = params.str();

  try {
    Output result;
    const std::string name = cmd->get_name();
    if (name == "imspe") {
      result = imspe.run();
    } else if (name == "entropy") {
      result = ent.run(err);
    } else if (name == "optimize") {
      result = opt.run();
    } else if (name == "table1") {
      const auto seed = resolve_seed(table.seed);
      const auto rows = table.rows(seed);
      result = {io::efficiency_csv(rows), seed};
      const auto report = io::efficiency_report_json(rows, table.tolerance_pp);
      if (!table.report_path.empty()) {
        write_file(table.report_path, report);
        manifest.add_output(table.report_path, report);
      }
      for (const auto& r : rows) {
        if (std::abs(r.report.relative_efficiency_pct - r.reference->relative_efficiency_pct) >
            table.tolerance_pp) {
          err << "discrepancy: " << r.reference->year << " n=" << r.report.n << " computed "
              << io::format_number(r.report.relative_efficiency_pct) << "% printed "
              << io::format_number(r.reference->relative_efficiency_pct) << "%\n";
        }
      }
    } else if (name == "profile") {
      result = prof.run();
    } else if (name == "surface") {
      result = surf.run();
    } else if (name == "simulate") {
      result = sim.run();
    } else if (name == "estimate") {
      result = est.run(manifest);
    } else if (name == "fetch") {
      result = {fetch_url(fetch.url, fetch.timeout_s), std::nullopt};
    }
    manifest.seed = result.seed;

    if (common.out_path.empty()) {
      out << result.content;
      manifest.add_output("-", result.content);
    } else {
      write_file(common.out_path, result.content);
      manifest.add_output(common.out_path, result.content);
    }
    manifest.wall_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::string manifest_path = common.manifest_path;
    if (manifest_path.empty() && !common.out_path.empty()) {
      manifest_path = common.out_path + ".manifest.json";
    }
    if (manifest_path.empty()) {
      err << manifest.to_json() << '\n';
    } else {
      write_file(manifest_path, manifest.to_json() + "\n");
    }
  } catch (...) {
    return exit_code_for(std::current_exception(), err);
  }
  return kExitOk;
}

}  // namespace oudesign::cli
