#include "gpscale/cli.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <omp.h>

#include "CLI11.hpp"
#include "gpscale/config.hpp"
#include "gpscale/csv.hpp"
#include "gpscale/error.hpp"
#include "gpscale/experiments.hpp"
#include "gpscale/kernels.hpp"
#include "gpscale/pointsets.hpp"

namespace gpscale {
namespace {

struct GlobalOptions {
  std::string config_path;
  std::string out_path;
  std::vector<std::string> overrides;
  int threads = 0;
};

std::string short_real(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

ConfigFile load_config(const GlobalOptions& g) {
  ConfigFile file = g.config_path.empty() ? ConfigFile{} : ConfigFile::load(g.config_path);
  for (const auto& o : g.overrides) file.apply_override(o);
  return file;
}

std::optional<std::filesystem::path> destination(const GlobalOptions& g) {
  if (g.out_path.empty()) return std::nullopt;
  return std::filesystem::path(g.out_path);
}

// "slope_<col>=..." and "r2_<col>=..." footer lines, or a note when the
// window cannot be fitted.
void add_slope_footer(std::vector<std::string>& footer, const std::vector<CurveRecord>& records,
                      Column column, double window) {
  const std::string name = to_string(column);
  try {
    const RateFit f = fit_rate(records, column, window);
    footer.push_back("slope_" + name + "=" + format_real(f.slope));
    footer.push_back("r2_" + name + "=" + format_real(f.r2));
  } catch (const InsufficientData& e) {
    footer.push_back("slope_" + name + "=nan (" + e.what() + ")");
  } catch (const NonPositiveValues& e) {
    footer.push_back("slope_" + name + "=nan (" + e.what() + ")");
  }
}

void reject_config(const GlobalOptions& g, const char* sub) {
  if (!g.config_path.empty() || !g.overrides.empty()) {
    throw ConfigError(std::string(sub) + " does not read a config file; drop --config/--set");
  }
}

int run_mle_curve_cmd(const GlobalOptions& g, std::ostream& out) {
  const ExperimentConfig cfg = experiment_config(load_config(g), SweepKind::mle);
  const std::vector<CurveRecord> records = run_mle_curve(cfg);
  std::vector<std::string> footer;
  add_slope_footer(footer, records, Column::sigma_ml, cfg.fit_window);
  footer.push_back("theory_sigma_ml=" +
                   format_real(theoretical_exponent(effective_nu(cfg.kernel),
                                                    cfg.test_function.eta, cfg.kernel.dim)));
  emit_csv(curve_table(records, CurveSchema::mle, footer), destination(g), out);
  return kExitOk;
}

int run_cubature_curve_cmd(const GlobalOptions& g, std::ostream& out) {
  const ExperimentConfig cfg = experiment_config(load_config(g), SweepKind::cubature);
  const std::vector<CurveRecord> records = run_cubature_curve(cfg);
  std::vector<std::string> footer;
  for (Column c : {Column::abs_int_error, Column::sigma_ml, Column::score}) {
    add_slope_footer(footer, records, c, cfg.fit_window);
  }
  footer.push_back("theory_sigma_ml=" +
                   format_real(theoretical_exponent(effective_nu(cfg.kernel),
                                                    cfg.test_function.eta, cfg.kernel.dim)));
  emit_csv(curve_table(records, CurveSchema::cubature, footer), destination(g), out);
  return kExitOk;
}

struct GeometryOptions {
  std::string design = "uniform_grid";
  std::vector<int> n;
  int dim = 0;
  int resolution = 0;
};

int run_geometry_cmd(const GlobalOptions& g, const GeometryOptions& o, std::ostream& out) {
  reject_config(g, "geometry");
  const Design design = design_from_string(o.design);
  const bool cartesian = design == Design::cartesian_grid || design == Design::cartesian_vdc;
  const int dim = o.dim > 0 ? o.dim : (cartesian ? 2 : 1);
  const int resolution = o.resolution > 0 ? o.resolution : default_geometry_resolution(dim);
  if (o.n.empty()) throw ConfigError("geometry: give at least one --n");
  std::vector<CurveRecord> records;
  for (int n : o.n) {
    if (n < 2) throw ConfigError("geometry: N must be at least 2");
    const PointSet x = make_design(design, n, dim);
    const Geometry geo = geometry(x, resolution);
    CurveRecord r;
    r.N = static_cast<int>(x.size());
    r.h = geo.fill_distance;
    r.q = geo.separation_radius;
    r.rho = geo.mesh_ratio;
    records.push_back(r);
  }
  emit_csv(curve_table(records, CurveSchema::geometry), destination(g), out);
  return kExitOk;
}

struct EvalOptions {
  std::string kernel = "matern";
  double nu = 0.5;
  double lengthscale = 1.0;
  double sigma = 1.0;
  std::vector<double> x;
  std::vector<double> y;
  int digits = 9;
};

int run_eval_cmd(const GlobalOptions& g, const EvalOptions& o, std::ostream& out) {
  reject_config(g, "eval");
  if (o.x.empty() || o.x.size() != o.y.size()) {
    throw ConfigError("eval: --x and --y must be points of the same dimension");
  }
  KernelSpec spec;
  try {
    spec.family = kernel_family_from_string(o.kernel);
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
  spec.nu = o.nu;
  spec.lengthscale = o.lengthscale;
  spec.sigma = o.sigma;
  spec.dim = static_cast<int>(o.x.size());
  try {
    spec.validate();
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
  const double v = eval_kernel(spec, o.x, o.y);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", o.digits, v);
  out << buf << '\n';
  return kExitOk;
}

int run_rates_cmd(const GlobalOptions& g, std::ostream& out) {
  const ConfigFile file = load_config(g);
  const ExperimentConfig probe = experiment_config(file, SweepKind::mle);
  const bool matern = probe.kernel.family == KernelFamily::matern;
  CsvTable table;
  table.header = {"name", "slope", "theory", "r2"};
  const std::string nan = format_real(std::nan(""));
  auto add_row = [&](const std::string& name, const std::vector<CurveRecord>& rec, Column col,
                     double window, std::optional<double> theory) {
    std::string slope = nan;
    std::string r2 = nan;
    try {
      const RateFit f = fit_rate(rec, col, window);
      slope = format_real(f.slope);
      r2 = format_real(f.r2);
    } catch (const InsufficientData&) {
    } catch (const NonPositiveValues&) {
    }
    table.rows.push_back({name, slope, theory ? format_real(*theory) : nan, r2});
  };

  if (matern) {
    const ExperimentConfig& base = probe;
    const std::vector<double> nus =
        file.has("rates.nu_list") ? file.get_reals("rates.nu_list") : std::vector<double>{base.kernel.nu};
    for (double nu : nus) {
      ExperimentConfig cfg = base;
      cfg.kernel.nu = nu;
      cfg.sup_error_resolution = 0;
      const auto records = run_mle_curve(cfg);
      add_row("sigma_ml[nu=" + short_real(nu) + "]", records, Column::sigma_ml, cfg.fit_window,
              theoretical_exponent(nu, cfg.test_function.eta, cfg.kernel.dim));
    }
  } else {
    const ExperimentConfig base = experiment_config(file, SweepKind::cubature);
    const std::vector<double> etas = file.has("rates.eta_list") ? file.get_reals("rates.eta_list")
                                                           : std::vector<double>{base.test_function.eta};
    for (double eta : etas) {
      ExperimentConfig cfg = base;
      cfg.test_function.eta = eta;
      const auto records = run_cubature_curve(cfg);
      const std::string tag = "[eta=" + short_real(eta) + "]";
      add_row("sigma_ml" + tag, records, Column::sigma_ml, cfg.fit_window,
              theoretical_exponent(effective_nu(cfg.kernel), eta, 1));
      add_row("abs_err" + tag, records, Column::abs_int_error, cfg.fit_window, std::nullopt);
      add_row("score" + tag, records, Column::score, cfg.fit_window, std::nullopt);
    }
  }
  emit_csv(table, destination(g), out);
  return kExitOk;
}

}  // namespace

int parse_and_dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gaussian-process scale estimation, cubature and credible-set diagnostics"};
  app.name("gpscale");
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  app.add_option("--config", g.config_path, "Experiment config file");
  app.add_option("--out", g.out_path, "Write CSV to this file instead of stdout");
  app.add_option("--set", g.overrides, "Override a config key (KEY=VALUE, repeatable)")
      ->allow_extra_args(false);
  app.add_option("--threads", g.threads, "OpenMP threads for sweeps")->check(CLI::PositiveNumber);

  auto* mle = app.add_subcommand("mle-curve", "sigma_ml sweep: N,sigma_ml,h,q,rho");
  auto* cub = app.add_subcommand("cubature-curve",
                                 "Bayesian cubature sweep: N,Q,abs_err,sigma_ml,sqrt_V,R_bc,score");
  auto* rates = app.add_subcommand("rates", "Fitted log-log slopes: name,slope,theory,r2");

  GeometryOptions geo_opts;
  auto* geo = app.add_subcommand("geometry", "Fill distance, separation radius, mesh ratio");
  geo->add_option("--design", geo_opts.design,
                  "uniform_grid|van_der_corput|vdc|cartesian_grid|cartesian_vdc");
  geo->add_option("--n", geo_opts.n, "Design size(s); per-axis for Cartesian designs")
      ->delimiter(',')
      ->required();
  geo->add_option("--dim", geo_opts.dim, "Dimension (default 1, or 2 for Cartesian designs)");
  geo->add_option("--resolution", geo_opts.resolution, "Fill-distance lattice points per axis");

  EvalOptions eval_opts;
  auto* ev = app.add_subcommand("eval", "Evaluate a kernel at one pair of points");
  ev->add_option("--kernel", eval_opts.kernel, "matern|brownian_motion|released_ibm");
  ev->add_option("--nu", eval_opts.nu, "Matérn smoothness");
  ev->add_option("--l", eval_opts.lengthscale, "Matérn lengthscale");
  ev->add_option("--sigma", eval_opts.sigma, "Scale");
  ev->add_option("--x", eval_opts.x, "First point, comma-separated coordinates")
      ->delimiter(',')
      ->required();
  ev->add_option("--y", eval_opts.y, "Second point, comma-separated coordinates")
      ->delimiter(',')
      ->required();
  ev->add_option("--digits", eval_opts.digits, "Significant digits")->check(CLI::Range(1, 17));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitConfig;
  }

  try {
    if (g.threads > 0) omp_set_num_threads(g.threads);
    if (mle->parsed()) return run_mle_curve_cmd(g, out);
    if (cub->parsed()) return run_cubature_curve_cmd(g, out);
    if (rates->parsed()) return run_rates_cmd(g, out);
    if (geo->parsed()) return run_geometry_cmd(g, geo_opts, out);
    if (ev->parsed()) return run_eval_cmd(g, eval_opts, out);
  } catch (const ConfigError& e) {
    err << "gpscale: config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    err << "gpscale: " << e.what() << '\n';
    return kExitNumerical;
  }
  err << app.help();
  return kExitConfig;
}

}  // namespace gpscale
