#include "gpscale/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <functional>
#include <numeric>

#include "gpscale/cubature.hpp"
#include "gpscale/error.hpp"
#include "gpscale/gp.hpp"
#include "gpscale/parallel.hpp"

namespace gpscale {
namespace {

constexpr std::size_t kMinRatePoints = 5;

std::vector<int> inclusive_range(int lo, int hi) {
  std::vector<int> v(static_cast<std::size_t>(hi - lo + 1));
  std::iota(v.begin(), v.end(), lo);
  return v;
}

int resolve_resolution(int value, int dim) {
  return value < 0 ? default_geometry_resolution(dim) : value;
}

double sup_error(const GpFit& fit, const FunctionExpansion& f, int resolution) {
  const int dim = fit.points().dim();
  const Kernel fk(f.kernel());
  const std::vector<double> lattice = make_lattice(resolution, dim, false);
  const std::vector<double> err = parallel::map_points(
      [&](ConstPoint x) { return std::abs(eval_expansion(f, fk, x) - fit.mean(x)); }, lattice,
      dim);
  return *std::max_element(err.begin(), err.end());
}

// Runs `body(i)` for every index of the sweep in parallel and stores the
// results in index order; the first failure by index is rethrown.
std::vector<CurveRecord> sweep(const ExperimentConfig& cfg,
                               const std::function<CurveRecord(int)>& body) {
  const auto count = static_cast<std::ptrdiff_t>(cfg.n_range.size());
  std::vector<CurveRecord> out(cfg.n_range.size());
  std::vector<std::exception_ptr> errors(cfg.n_range.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = count - 1; i >= 0; --i) {
    // Largest N first: better load balance for O(N^3) work.
    const int n = cfg.n_range[static_cast<std::size_t>(i)];
    try {
      out[i] = body(n);
    } catch (const FactorizationError& e) {
      errors[i] = std::make_exception_ptr(
          FactorizationError("N = " + std::to_string(n) + ": " + e.what()));
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::sort(out.begin(), out.end(), [](const CurveRecord& a, const CurveRecord& b) { return a.N < b.N; });
  return out;
}

void fill_geometry(CurveRecord& r, const PointSet& x, int resolution) {
  if (x.size() < 2) return;
  const Geometry g = geometry(x, resolution);
  r.h = g.fill_distance;
  r.q = g.separation_radius;
  r.rho = g.mesh_ratio;
}

}  // namespace

std::string to_string(Design design) {
  switch (design) {
    case Design::uniform_grid:
      return "uniform_grid";
    case Design::van_der_corput:
      return "van_der_corput";
    case Design::cartesian_grid:
      return "cartesian_grid";
    case Design::cartesian_vdc:
      return "cartesian_vdc";
  }
  return "unknown";
}

Design design_from_string(const std::string& name) {
  if (name == "uniform_grid" || name == "uniform" || name == "grid") return Design::uniform_grid;
  if (name == "van_der_corput" || name == "vdc") return Design::van_der_corput;
  if (name == "cartesian_grid") return Design::cartesian_grid;
  if (name == "cartesian_vdc") return Design::cartesian_vdc;
  throw ConfigError("unknown design '" + name + "'");
}

PointSet make_design(Design design, int n, int dim) {
  switch (design) {
    case Design::uniform_grid:
      if (dim != 1) throw ConfigError("uniform_grid is one-dimensional; use cartesian_grid");
      return uniform_grid(n);
    case Design::van_der_corput:
      if (dim != 1) throw ConfigError("van_der_corput is one-dimensional; use cartesian_vdc");
      return van_der_corput(n);
    case Design::cartesian_grid:
      return cartesian_product(uniform_grid(n), dim);
    case Design::cartesian_vdc:
      return cartesian_product(van_der_corput(n), dim);
  }
  throw ConfigError("unknown design");
}

void ExperimentConfig::validate() const {
  try {
    kernel.validate();
    test_function.validate();
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
  if (test_function.dim != kernel.dim) {
    throw ConfigError("test function and kernel must have the same dimension");
  }
  if (n_range.empty()) throw ConfigError("n_range must not be empty");
  for (std::size_t i = 0; i < n_range.size(); ++i) {
    if (n_range[i] < 2) throw ConfigError("every N in n_range must be at least 2");
    if (i > 0 && n_range[i] <= n_range[i - 1]) {
      throw ConfigError("n_range must be strictly increasing");
    }
  }
  if (geometry_resolution >= 0 && geometry_resolution < 64) {
    throw ConfigError("geometry_resolution must be at least 64");
  }
  if (sup_error_resolution > 0 && sup_error_resolution < 2) {
    throw ConfigError("sup_error_resolution must be 0 (off) or at least 2");
  }
  if (!(quadrature_tol > 0.0)) throw ConfigError("quadrature_tol must be positive");
  if (!(fit_window > 0.0 && fit_window <= 1.0)) throw ConfigError("fit_window must lie in (0, 1]");
  const bool cartesian = design == Design::cartesian_grid || design == Design::cartesian_vdc;
  if (!cartesian && kernel.dim != 1) {
    throw ConfigError(to_string(design) + " needs dim = 1");
  }
}

ExperimentConfig ExperimentConfig::mle_1d(double nu) {
  ExperimentConfig c;
  c.kernel = KernelSpec::matern(nu, 0.2, 1);
  c.test_function = {0.5, 0.2, {1.0, 0.5, 0.2}, {0.2, 0.55, 0.78}, 1};
  c.design = Design::uniform_grid;
  c.n_range = inclusive_range(2, 300);
  return c;
}

ExperimentConfig ExperimentConfig::mle_2d(double nu) {
  ExperimentConfig c;
  c.kernel = KernelSpec::matern(nu, 0.8, 2);
  c.test_function = {0.75, 0.8, {1.0, 0.5, 0.2}, {0.1, 0.1, 0.5, 0.1, 0.725, 0.565}, 2};
  c.design = Design::cartesian_grid;
  c.n_range = inclusive_range(2, 40);
  return c;
}

ExperimentConfig ExperimentConfig::cubature_1d(double eta) {
  ExperimentConfig c;
  c.kernel = KernelSpec::released_ibm();
  c.test_function = {eta, 0.7, {1.0, 2.0, 0.5}, {0.125, 0.5, 0.75}, 1};
  c.design = Design::van_der_corput;
  c.n_range = inclusive_range(2, 256);
  return c;
}

double theoretical_exponent(double nu, double eta, int d) {
  if (!(nu > 0.0) || !(eta > 0.0) || d < 1) {
    throw DomainError("theoretical_exponent: need nu, eta > 0 and d >= 1");
  }
  return std::max(nu - 2.0 * eta, 0.0) / d - 0.5;
}

double smoothness_of_expansion(const FunctionExpansion& f) { return 2.0 * f.eta + 0.5 * f.dim; }

double effective_nu(const KernelSpec& spec) { return sobolev_order(spec) - 0.5 * spec.dim; }

std::vector<CurveRecord> run_mle_curve(const ExperimentConfig& cfg) {
  cfg.validate();
  const int dim = cfg.kernel.dim;
  const int geo_res = resolve_resolution(cfg.geometry_resolution, dim);
  const int sup_res = resolve_resolution(cfg.sup_error_resolution, dim);
  return sweep(cfg, [&](int n) {
    PointSet x = make_design(cfg.design, n, dim);
    CurveRecord r;
    r.N = static_cast<int>(x.size());
    fill_geometry(r, x, geo_res);
    std::vector<double> fx = observe(cfg.test_function, x);
    const GpFit g = fit(cfg.kernel, std::move(x), std::move(fx));
    r.sigma_ml = g.sigma_ml();
    if (sup_res > 0) r.sup_error = sup_error(g, cfg.test_function, sup_res);
    return r;
  });
}

std::vector<CurveRecord> run_cubature_curve(const ExperimentConfig& cfg) {
  cfg.validate();
  if (cfg.kernel.dim != 1) throw ConfigError("cubature-curve runs in one dimension only");
  const Embedding emb = make_embedding(cfg.kernel, cfg.quadrature_tol);
  const double truth = integrate_expansion(cfg.test_function, cfg.quadrature_tol);
  const int geo_res = resolve_resolution(cfg.geometry_resolution, 1);
  const int sup_res = cfg.sup_error_resolution < 0 ? 0 : cfg.sup_error_resolution;
  return sweep(cfg, [&](int n) {
    PointSet x = make_design(cfg.design, n, 1);
    CurveRecord r;
    r.N = static_cast<int>(x.size());
    fill_geometry(r, x, geo_res);
    std::vector<double> fx = observe(cfg.test_function, x);
    const GpFit g = fit(cfg.kernel, std::move(x), std::move(fx));
    const CubatureResult c = cubature(g, emb, truth);
    r.sigma_ml = g.sigma_ml();
    r.Q = c.Q;
    r.abs_int_error = std::abs(truth - c.Q);
    r.sqrt_V = std::sqrt(c.V);
    r.R_bc = c.R_bc;
    r.score = *c.score;
    r.score_fixed_sigma = standard_score(truth - c.Q, cfg.kernel.sigma * r.sqrt_V);
    if (sup_res > 0) r.sup_error = sup_error(g, cfg.test_function, sup_res);
    return r;
  });
}

Column column_from_string(const std::string& name) {
  if (name == "sigma_ml") return Column::sigma_ml;
  if (name == "sup_error") return Column::sup_error;
  if (name == "abs_int_error" || name == "abs_err") return Column::abs_int_error;
  if (name == "sqrt_V") return Column::sqrt_V;
  if (name == "R_bc") return Column::R_bc;
  if (name == "score") return Column::score;
  if (name == "score_fixed_sigma") return Column::score_fixed_sigma;
  if (name == "h") return Column::h;
  if (name == "rho") return Column::rho;
  throw ConfigError("unknown column '" + name + "'");
}

std::string to_string(Column column) {
  switch (column) {
    case Column::sigma_ml:
      return "sigma_ml";
    case Column::sup_error:
      return "sup_error";
    case Column::abs_int_error:
      return "abs_err";
    case Column::sqrt_V:
      return "sqrt_V";
    case Column::R_bc:
      return "R_bc";
    case Column::score:
      return "score";
    case Column::score_fixed_sigma:
      return "score_fixed_sigma";
    case Column::h:
      return "h";
    case Column::rho:
      return "rho";
  }
  return "unknown";
}

double column_value(const CurveRecord& r, Column column) {
  switch (column) {
    case Column::sigma_ml:
      return r.sigma_ml;
    case Column::sup_error:
      return r.sup_error;
    case Column::abs_int_error:
      return r.abs_int_error;
    case Column::sqrt_V:
      return r.sqrt_V;
    case Column::R_bc:
      return r.R_bc;
    case Column::score:
      return r.score;
    case Column::score_fixed_sigma:
      return r.score_fixed_sigma;
    case Column::h:
      return r.h;
    case Column::rho:
      return r.rho;
  }
  return 0.0;
}

RateFit fit_rate(const std::vector<CurveRecord>& records, Column column, double window) {
  if (!(window > 0.0 && window <= 1.0)) throw DomainError("fit_rate: window must lie in (0, 1]");
  const auto take = static_cast<std::size_t>(std::ceil(window * static_cast<double>(records.size())));
  if (take < kMinRatePoints) {
    throw InsufficientData("fit_rate: need at least 5 records in the window, got " +
                           std::to_string(take));
  }
  std::vector<double> lx;
  std::vector<double> ly;
  for (std::size_t i = records.size() - take; i < records.size(); ++i) {
    const double v = column_value(records[i], column);
    if (!(v > 0.0) || records[i].N <= 0) {
      throw NonPositiveValues("fit_rate: column " + to_string(column) +
                              " has a non-positive value at N = " + std::to_string(records[i].N));
    }
    lx.push_back(std::log(static_cast<double>(records[i].N)));
    ly.push_back(std::log(v));
  }
  const double n = static_cast<double>(lx.size());
  const double mx = std::accumulate(lx.begin(), lx.end(), 0.0) / n;
  const double my = std::accumulate(ly.begin(), ly.end(), 0.0) / n;
  double sxx = 0.0;
  double sxy = 0.0;
  double syy = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
    syy += (ly[i] - my) * (ly[i] - my);
  }
  if (!(sxx > 0.0)) throw InsufficientData("fit_rate: all N in the window coincide");
  RateFit fit;
  fit.points = lx.size();
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double ss_res = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    const double e = ly[i] - (fit.intercept + fit.slope * lx[i]);
    ss_res += e * e;
  }
  fit.r2 = syy > 0.0 ? std::clamp(1.0 - ss_res / syy, 0.0, 1.0) : 1.0;
  return fit;
}

}  // namespace gpscale
