#include "gpscale/cubature.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "gpscale/error.hpp"
#include "gpscale/parallel.hpp"
#include "gpscale/quadrature.hpp"

namespace gpscale {
namespace {

constexpr double kVarianceClampTol = 1e-8;

void require_unit_interval(ConstPoint x) {
  if (x.size() != 1 || !(x[0] >= 0.0 && x[0] <= 1.0)) {
    throw DomainError("kernel mean: point must lie in [0, 1]");
  }
}

// int_0^1 min(x, y) dy
double bm_kernel_mean(double x) { return x - 0.5 * x * x; }

// int_0^1 [1 + xy + min^3/3 + |x-y| min^2/2] dy
double ibm_kernel_mean(double x) {
  return 1.0 + x / 2.0 + x * x / 4.0 - x * x * x / 6.0 + x * x * x * x / 24.0;
}

Embedding closed_form(const KernelSpec& spec, double tol) {
  if (spec.family == KernelFamily::brownian_motion) {
    return Embedding(spec, EmbeddingMethod::closed_form, tol,
                     [](ConstPoint x) {
                       require_unit_interval(x);
                       return bm_kernel_mean(x[0]);
                     },
                     1.0 / 3.0);
  }
  if (spec.family == KernelFamily::released_ibm) {
    return Embedding(spec, EmbeddingMethod::closed_form, tol,
                     [](ConstPoint x) {
                       require_unit_interval(x);
                       return ibm_kernel_mean(x[0]);
                     },
                     13.0 / 10.0);
  }
  throw DomainError("make_embedding: no closed form for " + to_string(spec.family));
}

Embedding numeric_matern(const KernelSpec& spec, double tol) {
  const Kernel kernel(spec);
  auto profile = [kernel](double r) { return kernel.matern_radial(r); };
  if (spec.dim == 1) {
    // Stationarity: int_0^1 Phi(|x - y|) dy = G(x) + G(1 - x), G(t) = int_0^t Phi.
    auto mean = [profile, tol](ConstPoint x) {
      const double a = x[0];
      return quadrature::integrate_adaptive(profile, 0.0, a, 0.5 * tol).value +
             quadrature::integrate_adaptive(profile, 0.0, 1.0 - a, 0.5 * tol).value;
    };
    const double energy =
        2.0 * quadrature::integrate_adaptive([&](double r) { return (1.0 - r) * profile(r); },
                                             0.0, 1.0, 0.5 * tol)
                  .value;
    return Embedding(spec, EmbeddingMethod::numeric_quadrature, tol, mean, energy);
  }
  if (spec.dim == 2) {
    auto radial2 = [profile](double u, double v) { return profile(std::hypot(u, v)); };
    // Four rectangles with the singular corner at the query point.
    auto mean = [radial2, tol](ConstPoint x) {
      const std::array<double, 2> ua{x[0], 1.0 - x[0]};
      const std::array<double, 2> va{x[1], 1.0 - x[1]};
      double acc = 0.0;
      for (double a : ua) {
        for (double b : va) acc += quadrature::integrate_2d(radial2, 0.0, a, 0.0, b, 0.25 * tol);
      }
      return acc;
    };
    const double energy =
        4.0 * quadrature::integrate_2d(
                  [&](double u, double v) { return (1.0 - u) * (1.0 - v) * radial2(u, v); }, 0.0,
                  1.0, 0.0, 1.0, 0.25 * tol);
    return Embedding(spec, EmbeddingMethod::numeric_quadrature, tol, mean, energy);
  }
  throw DomainError("make_embedding: numeric embeddings support d <= 2 only");
}

Embedding numeric_generic_1d(const KernelSpec& spec, double tol) {
  const Kernel kernel(spec);
  auto mean = [kernel, tol](ConstPoint x) {
    require_unit_interval(x);
    const double a = x[0];
    const std::array<double, 1> cut{a};
    return quadrature::integrate(
        [&](double y) {
          const std::array<double, 1> p{y};
          return kernel.unit(x, p);
        },
        0.0, 1.0, tol, cut);
  };
  const double energy = quadrature::integrate_adaptive(
                            [&](double x) {
                              const std::array<double, 1> p{x};
                              return mean(p);
                            },
                            0.0, 1.0, tol)
                            .value;
  return Embedding(spec, EmbeddingMethod::numeric_quadrature, tol, mean, energy);
}

}  // namespace

Embedding make_embedding(const KernelSpec& spec, double tol) {
  return make_embedding(spec, tol,
                        spec.family == KernelFamily::matern ? EmbeddingMethod::numeric_quadrature
                                                            : EmbeddingMethod::closed_form);
}

Embedding make_embedding(const KernelSpec& spec, double tol, EmbeddingMethod method) {
  spec.validate();
  if (!(tol > 0.0)) throw DomainError("make_embedding: tolerance must be positive");
  const KernelSpec unit = spec.unit();
  if (method == EmbeddingMethod::closed_form) return closed_form(unit, tol);
  if (unit.family == KernelFamily::matern) return numeric_matern(unit, tol);
  return numeric_generic_1d(unit, tol);
}

CubatureResult cubature(const GpFit& fit, const Embedding& emb,
                        std::optional<double> true_integral) {
  if (!emb.spec().same_kernel(fit.spec())) {
    throw KernelMismatch("cubature: embedding was built for a different kernel");
  }
  const PointSet& x = fit.points();
  const auto n = static_cast<Eigen::Index>(x.size());
  Eigen::VectorXd z(n);
  for (Eigen::Index i = 0; i < n; ++i) z(i) = emb.kernel_mean(x[i]);

  CubatureResult r;
  r.sigma_ml = fit.sigma_ml();
  r.Q = fit.weights().dot(z);
  const double v = emb.initial_energy() - fit.solve_lower(z).squaredNorm();
  if (v < -kVarianceClampTol) {
    throw NumericalError("cubature: integral variance is negative beyond round-off");
  }
  r.V = std::max(0.0, v);
  r.R_bc = r.sigma_ml * std::sqrt(r.V);
  if (true_integral) r.score = standard_score(*true_integral - r.Q, r.R_bc);
  return r;
}

double trapezoid_reference(const std::function<double(double)>& f, int n) {
  if (n < 1) throw DomainError("trapezoid_reference: N must be at least 1");
  double acc = 0.0;
  double prev = f(0.0);
  for (int i = 1; i <= n; ++i) {
    const double cur = f(static_cast<double>(i) / n);
    acc += 0.5 * (prev + cur);
    prev = cur;
  }
  return acc / n;
}

double underconfidence_diagnostic(const GpFit& fit, int resolution) {
  if (resolution < 64) throw DomainError("underconfidence_diagnostic: resolution must be >= 64");
  const int dim = fit.points().dim();
  const std::vector<double> cells = make_lattice(resolution, dim, true);
  const std::vector<double> var =
      parallel::map_points([&fit](ConstPoint x) { return fit.var_unit(x); }, cells, dim);
  double sum = 0.0;
  for (double v : var) sum += v;
  const double integral = sum / static_cast<double>(var.size());
  return std::sqrt(static_cast<double>(fit.size())) * std::sqrt(integral);
}

double integrate_expansion(const FunctionExpansion& f, double tol) {
  f.validate();
  const Embedding emb = make_embedding(f.kernel(), tol);
  double acc = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) acc += f.coefficients[i] * emb.kernel_mean(f.center(i));
  return acc;
}

}  // namespace gpscale
