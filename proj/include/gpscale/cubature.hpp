#pragma once

#include <functional>
#include <optional>

#include "gpscale/gp.hpp"
#include "gpscale/kernels.hpp"

namespace gpscale {

enum class EmbeddingMethod { closed_form, numeric_quadrature };

/// Kernel mean x -> int_Omega K(x, y) dy and initial energy
/// int int K(x, y) dx dy on Omega = [0,1]^d with unit weight and unit scale.
class Embedding {
 public:
  Embedding(KernelSpec spec, EmbeddingMethod method, double tol,
            std::function<double(ConstPoint)> kernel_mean, double initial_energy)
      : spec_(spec), method_(method), tol_(tol), kernel_mean_(std::move(kernel_mean)),
        initial_energy_(initial_energy) {}

  const KernelSpec& spec() const { return spec_; }
  EmbeddingMethod method() const { return method_; }
  double tol() const { return tol_; }
  double kernel_mean(ConstPoint x) const { return kernel_mean_(x); }
  double initial_energy() const { return initial_energy_; }

 private:
  KernelSpec spec_;
  EmbeddingMethod method_;
  double tol_;
  std::function<double(ConstPoint)> kernel_mean_;
  double initial_energy_;
};

/// Closed form for the Brownian-motion kernels, adaptive quadrature for
/// Matérn (d <= 2).
Embedding make_embedding(const KernelSpec& spec, double tol);

/// Explicit method choice. Closed forms exist only for the Brownian-motion
/// kernels; numeric quadrature works for every family.
Embedding make_embedding(const KernelSpec& spec, double tol, EmbeddingMethod method);

struct CubatureResult {
  double Q = 0.0;        // posterior mean of the integral
  double V = 0.0;        // posterior variance at unit scale
  double R_bc = 0.0;     // sigma_ml * sqrt(V)
  double sigma_ml = 0.0;
  std::optional<double> score;  // |I - Q| / R_bc when I is supplied
};

/// Bayesian cubature Q = w^T z, V = E - z^T K^{-1} z with z_i the kernel mean
/// at the data points. The embedding must describe the fit's kernel.
CubatureResult cubature(const GpFit& fit, const Embedding& emb,
                        std::optional<double> true_integral = std::nullopt);

/// Composite trapezoidal rule on x_n = n/N, n = 0..N.
double trapezoid_reference(const std::function<double(double)>& f, int n);

/// sqrt(N) * sqrt(int_Omega var_unit(x) dx), with the integral taken by the
/// midpoint rule on a resolution^d cell lattice.
double underconfidence_diagnostic(const GpFit& fit, int resolution);

/// int_{[0,1]^d} f(x) dx for a Matérn expansion, via numeric kernel means
/// at the centers.
double integrate_expansion(const FunctionExpansion& f, double tol);

}  // namespace gpscale
