#pragma once

#include <functional>
#include <span>
#include <vector>

namespace gpscale::quadrature {

/// Gauss–Legendre rule on [-1, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// n-point rule with nodes from Newton iteration on P_n. Exact for
/// polynomials of degree 2n - 1.
GaussLegendreRule gauss_legendre(int n);

using Integrand = std::function<double(double)>;

struct AdaptiveResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int panels = 0;
};

/// Global adaptive composite Gauss–Legendre quadrature: the panel with the
/// largest error estimate (10-point rule against its two halves) is bisected
/// until the summed estimate drops below `tol`. Throws NumericalError if the
/// panel budget runs out first.
AdaptiveResult integrate_adaptive(const Integrand& f, double a, double b, double tol);

/// As above; the interval is first split at every breakpoint inside (a, b)
/// so that kinks and cusps sit on panel boundaries.
double integrate(const Integrand& f, double a, double b, double tol,
                 std::span<const double> breakpoints = {});

/// Iterated integral over [ax, bx] x [ay, by]; the inner integral is
/// computed to tol / 100.
double integrate_2d(const std::function<double(double, double)>& f, double ax, double bx,
                    double ay, double by, double tol);

}  // namespace gpscale::quadrature
