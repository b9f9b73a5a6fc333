#pragma once

#include <string>
#include <vector>

#include "gpscale/kernels.hpp"
#include "gpscale/pointsets.hpp"

namespace gpscale {

enum class Design { uniform_grid, van_der_corput, cartesian_grid, cartesian_vdc };

std::string to_string(Design design);
Design design_from_string(const std::string& name);

/// Point set of a design. For the Cartesian designs `n` is the per-axis
/// count and the set has n^dim points.
PointSet make_design(Design design, int n, int dim);

/// One deterministic sweep over N. All numeric settings have defaults; a
/// value of -1 for a resolution means "use the dimension's default".
struct ExperimentConfig {
  KernelSpec kernel;
  FunctionExpansion test_function;
  Design design = Design::uniform_grid;
  std::vector<int> n_range;
  int geometry_resolution = -1;
  int sup_error_resolution = -1;  // 0 disables the sup-error column
  double quadrature_tol = 1e-12;
  double fit_window = 0.5;

  /// Throws ConfigError on inconsistent settings.
  void validate() const;

  /// d = 1 maximum likelihood example: eta = 0.5, l = 0.2, a = (1, 0.5, 0.2),
  /// z = (0.2, 0.55, 0.78); uniform grids N = 2..300.
  static ExperimentConfig mle_1d(double nu);
  /// d = 2 example: eta = 0.75, l = 0.8, a = (1, 0.5, 0.2),
  /// z = ((0.1,0.1), (0.5,0.1), (0.725,0.565)); Cartesian grids 2^2..40^2.
  static ExperimentConfig mle_2d(double nu);
  /// Integration example: released IBM kernel, l = 0.7, a = (1, 2, 0.5),
  /// z = (0.125, 0.5, 0.75); van der Corput N = 2..256.
  static ExperimentConfig cubature_1d(double eta);
};

/// One row of a sweep. Columns a sweep does not compute stay zero.
struct CurveRecord {
  int N = 0;
  double sigma_ml = 0.0;
  double sup_error = 0.0;      // max |f - s| over the lattice
  double abs_int_error = 0.0;  // |I - Q|
  double Q = 0.0;
  double sqrt_V = 0.0;
  double R_bc = 0.0;
  double score = 0.0;              // |I - Q| / (sigma_ml sqrt V)
  double score_fixed_sigma = 0.0;  // |I - Q| / (sigma sqrt V) with the spec's sigma
  double h = 0.0;
  double q = 0.0;
  double rho = 0.0;
};

/// (nu - 2 eta)_+ / d - 1/2.
double theoretical_exponent(double nu, double eta, int d);

/// 2 eta + d/2.
double smoothness_of_expansion(const FunctionExpansion& f);

/// Matérn-equivalent smoothness alpha - d/2 of any supported kernel.
double effective_nu(const KernelSpec& spec);

/// sigma_ml (plus geometry and optional sup error) for every N.
/// FactorizationError messages name the offending N.
std::vector<CurveRecord> run_mle_curve(const ExperimentConfig& cfg);

/// Bayesian cubature sweep in one dimension: Q, |I - Q|, sigma_ml, sqrt V,
/// R_bc and scores for every N. I is computed once by adaptive quadrature.
std::vector<CurveRecord> run_cubature_curve(const ExperimentConfig& cfg);

enum class Column { sigma_ml, sup_error, abs_int_error, sqrt_V, R_bc, score, score_fixed_sigma, h, rho };

Column column_from_string(const std::string& name);
std::string to_string(Column column);
double column_value(const CurveRecord& r, Column column);

struct RateFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r2 = 0.0;
  std::size_t points = 0;
};

/// Least-squares line through (log N, log column) over the last
/// ceil(window * records) records. Throws InsufficientData for fewer than
/// five points and NonPositiveValues for non-positive entries.
RateFit fit_rate(const std::vector<CurveRecord>& records, Column column, double window);

}  // namespace gpscale
