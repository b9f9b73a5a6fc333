#pragma once

#include <cmath>
#include <vector>

#include <Eigen/Dense>

#include "gpscale/kernels.hpp"
#include "gpscale/pointsets.hpp"

namespace gpscale {

/// Posterior credible interval center +- psi * R for a level 1 - a.
struct CredibleInterval {
  double center = 0.0;
  double half_width = 0.0;
  double level = 0.0;  // 1 - a
  double psi = 0.0;    // F^{-1}(1 - a/2)
};

/// Absolute threshold below which numerator and denominator of a standard
/// score count as zero.
inline constexpr double kScoreZero = 1e-14;

/// |error| / width with the convention 0/0 = 1. Throws DegenerateScore when
/// the width vanishes but the error does not.
double standard_score(double error, double width);

/// A zero-mean GP with kernel sigma^2 K conditioned on exact observations.
///
/// The Gram matrix is factored at unit scale, so the conditional mean and
/// the unit-scale variance var_unit() do not depend on sigma. The closed-form
/// maximum likelihood scale is sigma_ml = sqrt(f^T K^{-1} f / N). Immutable
/// once built; const queries are safe from any number of threads.
class GpFit {
 public:
  const KernelSpec& spec() const { return spec_; }
  const PointSet& points() const { return points_; }
  const Eigen::VectorXd& observations() const { return observations_; }
  /// Lower-triangular Cholesky factor of the unit-scale Gram matrix.
  const Eigen::MatrixXd& cholesky_factor() const { return chol_; }
  /// K^{-1} f.
  const Eigen::VectorXd& weights() const { return weights_; }
  std::size_t size() const { return points_.size(); }

  double sigma_ml() const { return sigma_ml_; }
  /// f^T K^{-1} f.
  double quad_form() const { return quad_form_; }
  /// log det K (unit scale).
  double log_det() const { return log_det_; }

  /// Conditional mean k_X(x)^T K^{-1} f. Returns the observation exactly at
  /// data points.
  double mean(ConstPoint x) const;

  /// K(x,x) - k_X(x)^T K^{-1} k_X(x) at unit scale. Round-off negatives down
  /// to -1e-8 are clamped to zero; anything below throws NumericalError.
  /// Exactly zero at data points.
  double var_unit(ConstPoint x) const;

  /// sigma^2 var_unit(x) with the spec's sigma.
  double var(ConstPoint x) const { return spec_.sigma * spec_.sigma * var_unit(x); }

  /// L^{-1} v for the Cholesky factor L.
  Eigen::VectorXd solve_lower(const Eigen::VectorXd& v) const;

  /// -1/2 (f^T K^{-1} f / sigma^2 + N log sigma^2 + log det K + N log 2 pi).
  double log_marginal_likelihood(double sigma) const;

  /// center = mean(x), half_width = psi_a * sigma_ml * sqrt(var_unit(x)).
  CredibleInterval credible_interval(ConstPoint x, double a) const;

  /// |f_true - mean(x)| / (sigma_ml * sqrt(var_unit(x))), with 0/0 = 1.
  double standard_score(ConstPoint x, double f_true) const;

  /// RKHS norm of the conditional mean, sqrt(f^T K^{-1} f) = sqrt(N) sigma_ml.
  double rkhs_norm_of_mean() const { return std::sqrt(quad_form_); }

  /// ||f - s_{f,X}||_H = sqrt(max(0, ||f||_H^2 - f^T K^{-1} f)) for an
  /// expansion in the fit's own kernel; KernelMismatch otherwise.
  double rkhs_error(const FunctionExpansion& f) const;

 private:
  friend GpFit fit(const KernelSpec& spec, PointSet points, std::vector<double> observations);

  GpFit(const KernelSpec& spec, PointSet points) : spec_(spec), kernel_(spec), points_(std::move(points)) {}

  // Index of a data point with exactly these coordinates, or -1.
  std::ptrdiff_t find_data_point(ConstPoint x) const;

  KernelSpec spec_;
  Kernel kernel_;
  PointSet points_;
  Eigen::VectorXd observations_;
  Eigen::MatrixXd chol_;
  Eigen::VectorXd weights_;
  std::vector<std::size_t> sorted_;  // point indices in lexicographic order
  double quad_form_ = 0.0;
  double sigma_ml_ = 0.0;
  double log_det_ = 0.0;
};

/// Conditions the GP on (points, observations). Unpivoted Cholesky without
/// jitter; throws FactorizationError when the Gram matrix is not numerically
/// positive definite.
GpFit fit(const KernelSpec& spec, PointSet points, std::vector<double> observations);

/// f evaluated at every point of `points`.
std::vector<double> observe(const FunctionExpansion& f, const PointSet& points);

}  // namespace gpscale
