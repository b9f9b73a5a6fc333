#include "gpscale/gp.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "gpscale/error.hpp"
#include "gpscale/parallel.hpp"
#include "gpscale/specfun.hpp"

namespace gpscale {
namespace {

constexpr double kVarianceClampTol = 1e-8;

bool lex_less(ConstPoint a, ConstPoint b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

double standard_score(double error, double width) {
  error = std::abs(error);
  if (width < kScoreZero) {
    if (error < kScoreZero) return 1.0;
    throw DegenerateScore("standard score: zero credible width with non-zero error " +
                          std::to_string(error));
  }
  return error / width;
}

GpFit fit(const KernelSpec& spec, PointSet points, std::vector<double> observations) {
  spec.validate();
  if (points.dim() != spec.dim) {
    throw DomainError("fit: point dimension does not match the kernel");
  }
  if (observations.size() != points.size()) {
    throw DomainError("fit: need exactly one observation per point");
  }
  GpFit g(spec, std::move(points));
  const auto n = static_cast<Eigen::Index>(g.points_.size());
  g.observations_ = Eigen::Map<const Eigen::VectorXd>(observations.data(), n);

  Eigen::LLT<Eigen::MatrixXd> llt(parallel::gram_matrix(g.kernel_, g.points_));
  if (llt.info() != Eigen::Success) {
    throw FactorizationError("fit: Gram matrix is not numerically positive definite (N = " +
                             std::to_string(n) + ")");
  }
  g.chol_ = llt.matrixL();
  for (Eigen::Index i = 0; i < n; ++i) {
    if (!(g.chol_(i, i) > 0.0) || !std::isfinite(g.chol_(i, i))) {
      throw FactorizationError("fit: non-positive Cholesky pivot (N = " + std::to_string(n) + ")");
    }
    g.log_det_ += 2.0 * std::log(g.chol_(i, i));
  }

  const Eigen::VectorXd half = g.solve_lower(g.observations_);
  g.quad_form_ = half.squaredNorm();
  g.weights_ = g.chol_.transpose().triangularView<Eigen::Upper>().solve(half);
  g.sigma_ml_ = std::sqrt(g.quad_form_ / static_cast<double>(n));

  g.sorted_.resize(g.points_.size());
  std::iota(g.sorted_.begin(), g.sorted_.end(), std::size_t{0});
  std::sort(g.sorted_.begin(), g.sorted_.end(), [&g](std::size_t a, std::size_t b) {
    return lex_less(g.points_[a], g.points_[b]);
  });
  return g;
}

std::vector<double> observe(const FunctionExpansion& f, const PointSet& points) {
  if (points.dim() != f.dim) throw DomainError("observe: dimension mismatch");
  const Kernel k(f.kernel());
  std::vector<double> out(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) out[i] = eval_expansion(f, k, points[i]);
  return out;
}

std::ptrdiff_t GpFit::find_data_point(ConstPoint x) const {
  auto it = std::lower_bound(sorted_.begin(), sorted_.end(), x, [this](std::size_t i, ConstPoint q) {
    return lex_less(points_[i], q);
  });
  if (it == sorted_.end()) return -1;
  const ConstPoint p = points_[*it];
  return std::equal(p.begin(), p.end(), x.begin(), x.end()) ? static_cast<std::ptrdiff_t>(*it) : -1;
}

Eigen::VectorXd GpFit::solve_lower(const Eigen::VectorXd& v) const {
  return chol_.triangularView<Eigen::Lower>().solve(v);
}

double GpFit::mean(ConstPoint x) const {
  if (const std::ptrdiff_t i = find_data_point(x); i >= 0) return observations_(i);
  double acc = 0.0;
  for (std::size_t i = 0; i < points_.size(); ++i) {
    acc += weights_(static_cast<Eigen::Index>(i)) * kernel_.unit(points_[i], x);
  }
  return acc;
}

double GpFit::var_unit(ConstPoint x) const {
  if (find_data_point(x) >= 0) return 0.0;
  const auto n = static_cast<Eigen::Index>(points_.size());
  Eigen::VectorXd k(n);
  for (Eigen::Index i = 0; i < n; ++i) k(i) = kernel_.unit(points_[i], x);
  const double v = kernel_.unit(x, x) - solve_lower(k).squaredNorm();
  if (v < -kVarianceClampTol) {
    throw NumericalError("conditional variance " + std::to_string(v) +
                         " is negative beyond round-off; factorization is unreliable");
  }
  return std::max(0.0, v);
}

double GpFit::log_marginal_likelihood(double sigma) const {
  if (!(sigma > 0.0)) throw DomainError("log_marginal_likelihood: sigma must be positive");
  const double n = static_cast<double>(points_.size());
  const double s2 = sigma * sigma;
  return -0.5 * (quad_form_ / s2 + n * std::log(s2) + log_det_ +
                 n * std::log(2.0 * std::numbers::pi));
}

CredibleInterval GpFit::credible_interval(ConstPoint x, double a) const {
  if (!(a > 0.0 && a < 1.0)) throw DomainError("credible_interval: a must lie in (0, 1)");
  CredibleInterval ci;
  ci.level = 1.0 - a;
  ci.psi = specfun::inv_norm_cdf(1.0 - 0.5 * a);
  ci.center = mean(x);
  ci.half_width = ci.psi * sigma_ml_ * std::sqrt(var_unit(x));
  return ci;
}

double GpFit::standard_score(ConstPoint x, double f_true) const {
  return gpscale::standard_score(f_true - mean(x), sigma_ml_ * std::sqrt(var_unit(x)));
}

double GpFit::rkhs_error(const FunctionExpansion& f) const {
  if (!spec_.same_kernel(f.kernel())) {
    throw KernelMismatch("rkhs_error: expansion kernel differs from the fitted kernel");
  }
  const double norm = expansion_rkhs_norm(f, f.kernel());
  return std::sqrt(std::max(0.0, norm * norm - quad_form_));
}

}  // namespace gpscale
