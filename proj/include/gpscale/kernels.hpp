#pragma once

#include <span>
#include <string>
#include <vector>

namespace gpscale {

using ConstPoint = std::span<const double>;

enum class KernelFamily { matern, brownian_motion, released_ibm };

std::string to_string(KernelFamily family);
KernelFamily kernel_family_from_string(const std::string& name);

/// A member of one of the supported positive-definite kernel families,
/// including its scale sigma (the kernel is sigma^2 K).
///
/// Brownian-motion kernels live on [0, 1] only; `nu` and `lengthscale` are
/// ignored for them.
struct KernelSpec {
  KernelFamily family = KernelFamily::matern;
  double nu = 0.5;
  double lengthscale = 1.0;
  int dim = 1;
  double sigma = 1.0;

  static KernelSpec matern(double nu, double lengthscale, int dim = 1, double sigma = 1.0);
  static KernelSpec brownian_motion(double sigma = 1.0);
  static KernelSpec released_ibm(double sigma = 1.0);

  /// Throws DomainError if the fields violate the family's constraints.
  void validate() const;

  /// Same kernel with sigma = 1.
  KernelSpec unit() const;

  /// True when both describe the same unscaled kernel (sigma is ignored).
  bool same_kernel(const KernelSpec& other) const;
};

/// Sobolev order alpha of the kernel's RKHS: nu + d/2 for Matérn,
/// 1 for Brownian motion, 2 for the released integrated Brownian motion.
double sobolev_order(const KernelSpec& spec);

/// Kernel evaluator with the per-spec constants (Matérn normalizer,
/// half-integer polynomial) computed once.
class Kernel {
 public:
  explicit Kernel(const KernelSpec& spec);

  const KernelSpec& spec() const { return spec_; }

  /// sigma^2 K(x, y).
  double operator()(ConstPoint x, ConstPoint y) const { return scale_ * unit(x, y); }

  /// K(x, y) with sigma = 1.
  double unit(ConstPoint x, ConstPoint y) const;

  /// Unit-scale Matérn profile as a function of the distance r >= 0.
  double matern_radial(double r) const;

  bool half_integer() const { return half_integer_; }

 private:
  KernelSpec spec_;
  double scale_ = 1.0;
  double inv_rho_ = 1.0;  // sqrt(2 nu) / lengthscale
  double normalizer_ = 1.0;  // 2^{1-nu} / Gamma(nu)
  double zero_branch_ = 0.0;  // limit branch below this s (Bessel path only)
  bool half_integer_ = false;
  std::vector<double> poly_;  // half-integer profile exp(-s) * sum poly_[k] s^k
};

/// sigma^2 K(x, y). Throws DomainError for Brownian-motion kernels evaluated
/// outside [0, 1] and for dimension mismatches.
double eval_kernel(const KernelSpec& spec, ConstPoint x, ConstPoint y);

/// f(x) = sum_i a_i K_{eta, l}(x, z_i): a finite expansion in unit-scale
/// Matérn translates. Centers are stored row-major, `dim` coordinates each.
struct FunctionExpansion {
  double eta = 0.5;
  double lengthscale = 0.2;
  std::vector<double> coefficients;
  std::vector<double> centers;
  int dim = 1;

  std::size_t size() const { return coefficients.size(); }
  ConstPoint center(std::size_t i) const {
    return {centers.data() + i * static_cast<std::size_t>(dim), static_cast<std::size_t>(dim)};
  }

  /// Unit-scale Matérn kernel whose translates make up the expansion.
  KernelSpec kernel() const { return KernelSpec::matern(eta, lengthscale, dim); }

  /// Throws DomainError on size mismatch, empty expansion, coincident or
  /// out-of-domain centers.
  void validate() const;
};

double eval_expansion(const FunctionExpansion& f, ConstPoint x);
double eval_expansion(const FunctionExpansion& f, const Kernel& kernel, ConstPoint x);

/// sqrt(a^T K_zz a): the RKHS norm of the expansion. `spec` must be the
/// expansion's own kernel with sigma = 1, otherwise KernelMismatch.
double expansion_rkhs_norm(const FunctionExpansion& f, const KernelSpec& spec);

}  // namespace gpscale
