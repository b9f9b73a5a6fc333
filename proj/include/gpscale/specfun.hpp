#pragma once

// Special functions needed by the Matérn kernel and by credible intervals.
// All functions are pure and thread-safe.

namespace gpscale::specfun {

enum class SpecFunFlag { ok, underflow_to_zero, overflow };

struct SpecFunResult {
  double value = 0.0;
  SpecFunFlag flag = SpecFunFlag::ok;

  bool ok() const { return flag == SpecFunFlag::ok; }
};

/// Gamma function for finite x > 0. Throws DomainError otherwise.
double gamma(double x);

/// Modified Bessel function of the second kind K_nu(x) for real nu > 0, x > 0.
///
/// Uses Temme's series for x < 2 and Steed's continued fraction otherwise,
/// both at the reduced order mu = nu - round(nu) in [-1/2, 1/2), followed by
/// upward recurrence to nu. Values below the smallest normal double are
/// returned as zero with `underflow_to_zero`; values that overflow are
/// reported as `overflow` (value = +inf). Throws DomainError for nu <= 0,
/// x <= 0, or non-finite arguments.
SpecFunResult bessel_k(double nu, double x);

/// Standard normal CDF, F(z) = erfc(-z / sqrt 2) / 2.
double norm_cdf(double z);

/// Standard normal quantile F^{-1}(p) for p in (0, 1).
/// Rational initial guess followed by Halley refinement on the CDF.
double inv_norm_cdf(double p);

}  // namespace gpscale::specfun
