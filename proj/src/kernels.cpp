#include "gpscale/kernels.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

#include "gpscale/error.hpp"
#include "gpscale/specfun.hpp"

namespace gpscale {
namespace {

// Below this scaled distance the Bessel-form Matérn profile is replaced by
// its limit 1. For nu < 1 the profile deviates from 1 like s^{2 nu}, so the
// cutoff shrinks until that deviation is below double round-off.
constexpr double kMaternZeroBranch = 1e-8;
constexpr double kMaternZeroDeviation = 1e-17;
constexpr double kHalfIntegerTol = 1e-12;

double distance(ConstPoint x, ConstPoint y) {
  double s = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    const double d = x[k] - y[k];
    s += d * d;
  }
  return std::sqrt(s);
}

void require_unit_interval(ConstPoint x, const char* what) {
  if (x.size() != 1 || !(x[0] >= 0.0 && x[0] <= 1.0)) {
    throw DomainError(std::string(what) + ": Brownian-motion kernels need points in [0, 1]");
  }
}

double factorial(int n) {
  double r = 1.0;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace

std::string to_string(KernelFamily family) {
  switch (family) {
    case KernelFamily::matern:
      return "matern";
    case KernelFamily::brownian_motion:
      return "brownian_motion";
    case KernelFamily::released_ibm:
      return "released_ibm";
  }
  return "unknown";
}

KernelFamily kernel_family_from_string(const std::string& name) {
  if (name == "matern") return KernelFamily::matern;
  if (name == "brownian_motion" || name == "brownian" || name == "bm") {
    return KernelFamily::brownian_motion;
  }
  if (name == "released_ibm" || name == "ibm") return KernelFamily::released_ibm;
  throw DomainError("unknown kernel family '" + name + "'");
}

KernelSpec KernelSpec::matern(double nu, double lengthscale, int dim, double sigma) {
  KernelSpec s{KernelFamily::matern, nu, lengthscale, dim, sigma};
  s.validate();
  return s;
}

KernelSpec KernelSpec::brownian_motion(double sigma) {
  KernelSpec s{KernelFamily::brownian_motion, 0.5, 1.0, 1, sigma};
  s.validate();
  return s;
}

KernelSpec KernelSpec::released_ibm(double sigma) {
  KernelSpec s{KernelFamily::released_ibm, 1.5, 1.0, 1, sigma};
  s.validate();
  return s;
}

void KernelSpec::validate() const {
  if (!(sigma > 0.0) || !std::isfinite(sigma)) throw DomainError("kernel: sigma must be positive");
  if (dim < 1) throw DomainError("kernel: dimension must be at least 1");
  if (family == KernelFamily::matern) {
    if (!(nu > 0.0) || !std::isfinite(nu)) throw DomainError("matern: nu must be positive");
    if (!(lengthscale > 0.0) || !std::isfinite(lengthscale)) {
      throw DomainError("matern: lengthscale must be positive");
    }
  } else if (dim != 1) {
    throw DomainError(to_string(family) + ": only defined on [0, 1] (dim = 1)");
  }
}

KernelSpec KernelSpec::unit() const {
  KernelSpec s = *this;
  s.sigma = 1.0;
  return s;
}

bool KernelSpec::same_kernel(const KernelSpec& other) const {
  if (family != other.family || dim != other.dim) return false;
  if (family != KernelFamily::matern) return true;
  return nu == other.nu && lengthscale == other.lengthscale;
}

double sobolev_order(const KernelSpec& spec) {
  switch (spec.family) {
    case KernelFamily::matern:
      return spec.nu + 0.5 * spec.dim;
    case KernelFamily::brownian_motion:
      return 1.0;
    case KernelFamily::released_ibm:
      return 2.0;
  }
  return 0.0;
}

Kernel::Kernel(const KernelSpec& spec) : spec_(spec) {
  spec_.validate();
  scale_ = spec_.sigma * spec_.sigma;
  if (spec_.family != KernelFamily::matern) return;

  inv_rho_ = std::sqrt(2.0 * spec_.nu) / spec_.lengthscale;
  const double p = std::round(spec_.nu - 0.5);
  if (p >= 0.0 && std::abs(spec_.nu - (p + 0.5)) < kHalfIntegerTol) {
    // K_{p+1/2} profile: exp(-s) p!/(2p)! sum_i (p+i)!/(i!(p-i)!) (2s)^{p-i}
    half_integer_ = true;
    const int n = static_cast<int>(p);
    poly_.assign(n + 1, 0.0);
    const double lead = factorial(n) / factorial(2 * n);
    for (int i = 0; i <= n; ++i) {
      const int power = n - i;
      poly_[power] = lead * factorial(n + i) / (factorial(i) * factorial(n - i)) *
                     std::pow(2.0, power);
    }
  } else {
    normalizer_ = std::pow(2.0, 1.0 - spec_.nu) / specfun::gamma(spec_.nu);
    zero_branch_ = std::min(kMaternZeroBranch, std::pow(kMaternZeroDeviation, 0.5 / spec_.nu));
  }
}

double Kernel::matern_radial(double r) const {
  const double s = inv_rho_ * r;
  if (half_integer_) {
    double acc = 0.0;
    for (auto c = poly_.rbegin(); c != poly_.rend(); ++c) acc = acc * s + *c;
    return acc * std::exp(-s);
  }
  if (s < zero_branch_) return 1.0;
  const specfun::SpecFunResult k = specfun::bessel_k(spec_.nu, s);
  if (k.flag == specfun::SpecFunFlag::underflow_to_zero) return 0.0;
  // Overflow only happens for tiny s where the profile is at its limit.
  if (k.flag == specfun::SpecFunFlag::overflow) return 1.0;
  return std::min(1.0, normalizer_ * std::pow(s, spec_.nu) * k.value);
}

double Kernel::unit(ConstPoint x, ConstPoint y) const {
  switch (spec_.family) {
    case KernelFamily::matern:
      return matern_radial(distance(x, y));
    case KernelFamily::brownian_motion:
      return std::min(x[0], y[0]);
    case KernelFamily::released_ibm: {
      const double a = x[0];
      const double b = y[0];
      const double m = std::min(a, b);
      return 1.0 + a * b + m * m * m / 3.0 + 0.5 * std::abs(a - b) * m * m;
    }
  }
  return 0.0;
}

double eval_kernel(const KernelSpec& spec, ConstPoint x, ConstPoint y) {
  if (x.size() != static_cast<std::size_t>(spec.dim) ||
      y.size() != static_cast<std::size_t>(spec.dim)) {
    throw DomainError("eval_kernel: point dimension does not match the kernel");
  }
  if (spec.family != KernelFamily::matern) {
    require_unit_interval(x, "eval_kernel");
    require_unit_interval(y, "eval_kernel");
  }
  return Kernel(spec)(x, y);
}

void FunctionExpansion::validate() const {
  if (dim < 1) throw DomainError("expansion: dimension must be at least 1");
  if (!(eta > 0.0) || !(lengthscale > 0.0)) {
    throw DomainError("expansion: eta and lengthscale must be positive");
  }
  if (coefficients.empty()) throw DomainError("expansion: needs at least one term");
  if (centers.size() != coefficients.size() * static_cast<std::size_t>(dim)) {
    throw DomainError("expansion: number of centers does not match number of coefficients");
  }
  for (double c : centers) {
    if (!(c >= 0.0 && c <= 1.0)) throw DomainError("expansion: centers must lie in [0,1]^d");
  }
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = i + 1; j < size(); ++j) {
      if (std::equal(center(i).begin(), center(i).end(), center(j).begin())) {
        throw DomainError("expansion: centers must be distinct");
      }
    }
  }
}

double eval_expansion(const FunctionExpansion& f, const Kernel& kernel, ConstPoint x) {
  double acc = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    acc += f.coefficients[i] * kernel.unit(x, f.center(i));
  }
  return acc;
}

double eval_expansion(const FunctionExpansion& f, ConstPoint x) {
  if (x.size() != static_cast<std::size_t>(f.dim)) {
    throw DomainError("eval_expansion: point dimension does not match the expansion");
  }
  return eval_expansion(f, Kernel(f.kernel()), x);
}

double expansion_rkhs_norm(const FunctionExpansion& f, const KernelSpec& spec) {
  if (!spec.same_kernel(f.kernel()) || spec.sigma != 1.0) {
    throw KernelMismatch("expansion_rkhs_norm: kernel must be the expansion's own unit-scale Matérn kernel");
  }
  const Kernel k(spec);
  const auto m = static_cast<Eigen::Index>(f.size());
  Eigen::MatrixXd gram(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j <= i; ++j) {
      gram(i, j) = gram(j, i) = k.unit(f.center(i), f.center(j));
    }
  }
  const Eigen::Map<const Eigen::VectorXd> a(f.coefficients.data(), m);
  return std::sqrt(std::max(0.0, a.dot(gram * a)));
}

}  // namespace gpscale
