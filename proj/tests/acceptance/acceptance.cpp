// Acceptance checks. One line per criterion: PASS or FAIL, the measured
// quantity, and the wall time. Exits nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "gpscale/cubature.hpp"
#include "gpscale/experiments.hpp"
#include "gpscale/gp.hpp"
#include "gpscale/kernels.hpp"
#include "gpscale/specfun.hpp"
#include "oracles.hpp"

using namespace gpscale;

namespace {

int failures = 0;

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

void run(int id, double time_limit, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (time_limit > 0.0 && secs > time_limit) {
    o.pass = false;
    o.detail += fmt(" [over time limit %.0f s]", time_limit);
  }
  if (!o.pass) ++failures;
  std::printf("criterion %2d %s  %s  (%.2f s)\n", id, o.pass ? "PASS" : "FAIL", o.detail.c_str(), secs);
  std::fflush(stdout);
}

PointSet equispaced(int n) {
  std::vector<double> x;
  for (int i = 1; i <= n; ++i) x.push_back(static_cast<double>(i) / n);
  return PointSet(x, 1);
}

std::vector<double> sample(const std::function<double(double)>& f, const PointSet& x) {
  std::vector<double> v;
  for (std::size_t i = 0; i < x.size(); ++i) v.push_back(f(x[i][0]));
  return v;
}

std::vector<int> range(int lo, int hi) {
  std::vector<int> v(hi - lo + 1);
  std::iota(v.begin(), v.end(), lo);
  return v;
}

FunctionExpansion random_expansion(std::mt19937_64& rng, double nu, double l) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  FunctionExpansion f;
  f.eta = nu;
  f.lengthscale = l;
  const int m = 1 + static_cast<int>(rng() % 4);
  for (int i = 0; i < m; ++i) {
    f.coefficients.push_back(4.0 * u(rng) - 2.0);
    f.centers.push_back((i + u(rng)) / m);
  }
  return f;
}

Outcome slope_check(const std::string& name, const std::vector<CurveRecord>& r, double target,
                    double tol) {
  const RateFit f = fit_rate(r, Column::sigma_ml, 0.5);
  const bool ok = std::abs(f.slope - target) <= tol;
  return {ok, name + fmt(" slope %.3f", f.slope) + fmt(" target %.2f", target) + fmt(" +-%.2f", tol)};
}

Outcome merge(const std::vector<Outcome>& parts) {
  Outcome o;
  for (const auto& p : parts) {
    o.pass = o.pass && p.pass;
    o.detail += (o.detail.empty() ? "" : "; ") + p.detail;
  }
  return o;
}

}  // namespace

int main() {
  const Embedding bm = make_embedding(KernelSpec::brownian_motion(), 1e-12);

  run(1, 5.0, [&] {
    double worst = 0.0;
    for (int n = 2; n <= 128; ++n) {
      const GpFit g = fit(KernelSpec::brownian_motion(), equispaced(n), std::vector<double>(n, 1.0));
      const double ref = 1.0 / (12.0 * n * n);
      worst = std::max(worst, std::abs(cubature(g, bm).V - ref) / ref);
    }
    return Outcome{worst <= 1e-10, fmt("max rel |V - 1/(12N^2)| = %.3e", worst)};
  });

  run(2, 0.0, [&] {
    std::vector<std::function<double(double)>> fs;
    for (int k = 1; k <= 5; ++k) {
      fs.push_back([k](double x) { return std::pow(x, 0.5 * k); });
      fs.push_back([k](double x) { return std::sin(k * 1.7 * x); });
      fs.push_back([k](double x) { return x * std::exp(-k * x); });
      fs.push_back([k](double x) { return std::log1p(k * x) - x * x * x / k; });
    }
    double worst = 0.0;
    for (int n = 2; n <= 64; ++n) {
      const PointSet x = equispaced(n);
      for (const auto& f : fs) {
        const GpFit g = fit(KernelSpec::brownian_motion(), x, sample(f, x));
        worst = std::max(worst, std::abs(cubature(g, bm).Q - trapezoid_reference(f, n)));
      }
    }
    return Outcome{worst <= 1e-10, fmt("20 functions, max |Q - trapezoid| = %.3e", worst)};
  });

  run(3, 0.0, [&] {
    double worst = 0.0;
    for (int n = 2; n <= 64; ++n) {
      const PointSet x = equispaced(n);
      const GpFit g = fit(KernelSpec::brownian_motion(), x, sample([](double t) { return t * t; }, x));
      const double ref = 1.0 / (6.0 * n * n);
      worst = std::max(worst, std::abs(std::abs(1.0 / 3.0 - cubature(g, bm).Q) - ref) / ref);
    }
    return Outcome{worst <= 1e-10, fmt("max rel |err - 1/(6N^2)| = %.3e", worst)};
  });

  run(4, 0.0, [&] {
    std::mt19937_64 rng(404);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double upper_margin = 1e300;
    double lower_margin = 1e300;
    for (int t = 0; t < 50; ++t) {
      const double nu = std::vector<double>{0.5, 0.75, 1.25, 1.5, 2.5}[rng() % 5];
      const double l = 0.1 + 0.3 * u(rng);
      const FunctionExpansion f = random_expansion(rng, nu, l);
      const double fnorm = expansion_rkhs_norm(f, f.kernel());
      // Nested designs: prefixes of a random permutation of a 48-point grid.
      std::vector<double> grid;
      for (int i = 0; i < 48; ++i) grid.push_back((i + 0.5) / 48.0);
      std::shuffle(grid.begin(), grid.end(), rng);
      const double fx = eval_expansion(f, std::vector<double>{grid[0]});
      // ||s_{f,{x*}}||_H = |f(x*)| / sqrt(K(x*, x*)) and K(x, x) = 1.
      const double floor = std::abs(fx);
      for (int n = 1; n <= 48; ++n) {
        const PointSet x(std::vector<double>(grid.begin(), grid.begin() + n), 1);
        const GpFit g = fit(f.kernel(), x, observe(f, x));
        const double s = g.sigma_ml() * std::sqrt(static_cast<double>(n));
        upper_margin = std::min(upper_margin, fnorm + 1e-10 - s);
        lower_margin = std::min(lower_margin, s - (floor - 1e-10));
      }
    }
    const bool ok = upper_margin >= 0.0 && lower_margin >= 0.0;
    return Outcome{ok, fmt("min(||f|| - sigma sqrt N) = %.3e", upper_margin) +
                           fmt(", min(sigma sqrt N - ||s_x*||) = %.3e", lower_margin)};
  });

  run(5, 120.0, [&] {
    std::vector<Outcome> parts;
    for (double nu : {0.5, 1.0, 2.0, 3.0}) {
      ExperimentConfig c = ExperimentConfig::mle_1d(nu);
      c.n_range = range(100, 300);
      c.sup_error_resolution = 0;
      parts.push_back(slope_check(fmt("nu=%g", nu), run_mle_curve(c), nu == 0.5 ? -0.5 : nu - 1.5, 0.15));
    }
    return merge(parts);
  });

  run(6, 300.0, [&] {
    std::vector<Outcome> parts;
    for (double nu : {1.5, 2.5}) {
      ExperimentConfig c = ExperimentConfig::mle_2d(nu);
      c.sup_error_resolution = 0;
      parts.push_back(slope_check(fmt("nu=%g", nu), run_mle_curve(c), nu / 2.0 - 1.25, 0.2));
    }
    return merge(parts);
  });

  run(7, 0.0, [&] {
    ExperimentConfig c = ExperimentConfig::mle_1d(1.5);
    c.sup_error_resolution = 0;
    return slope_check("nu=1.5 eta=0.5", run_mle_curve(c), 0.0, 0.15);
  });

  run(8, 120.0, [&] {
    auto score_slope = [](const std::vector<CurveRecord>& r, double window) {
      return fit_rate(r, Column::score, window).slope;
    };
    // Slope through the dyadic sizes 16, 32, ..., 256 only.
    auto dyadic_slope = [](const std::vector<CurveRecord>& r) {
      std::vector<CurveRecord> d;
      for (const auto& x : r) {
        if (x.N >= 16 && (x.N & (x.N - 1)) == 0) d.push_back(x);
      }
      return fit_rate(d, Column::score, 1.0).slope;
    };
    const auto low = run_cubature_curve(ExperimentConfig::cubature_1d(0.25));
    const auto high = run_cubature_curve(ExperimentConfig::cubature_1d(1.25));
    const double s_low = score_slope(low, 0.5);
    const double s_high = score_slope(high, 0.5);
    const bool ok = s_low > 0.0 && s_high <= 0.1;
    return Outcome{ok, fmt("score slope eta=0.25: %.3f (> 0)", s_low) +
                           fmt(", eta=1.25: %.3f (<= 0.1)", s_high) +
                           fmt("; eta=1.25 over all N: %.3f", score_slope(high, 1.0)) +
                           fmt(", dyadic N: %.3f", dyadic_slope(high))};
  });

  run(9, 0.0, [&] {
    std::mt19937_64 rng(909);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    int violations = 0;
    double worst = -1e300;
    auto record = [&](double lhs, double rhs) {
      worst = std::max(worst, lhs - rhs);
      if (lhs > rhs + 1e-8) ++violations;
    };
    for (int t = 0; t < 50; ++t) {
      const double nu = std::vector<double>{0.5, 0.75, 1.25, 1.5}[rng() % 4];
      const double l = 0.1 + 0.3 * u(rng);
      const FunctionExpansion f = random_expansion(rng, nu, l);
      const int n = 3 + static_cast<int>(rng() % 25);
      std::vector<double> xs(n);
      for (int i = 0; i < n; ++i) xs[i] = (i + 0.2 + 0.6 * u(rng)) / n;
      const PointSet x(xs, 1);
      const GpFit g = fit(f.kernel(), x, observe(f, x));
      const double fnorm = expansion_rkhs_norm(f, f.kernel());
      const double enorm = g.rkhs_error(f);
      for (int k = 0; k < 100; ++k) {
        const std::vector<double> p{u(rng)};
        const double e = std::abs(eval_expansion(f, p) - g.mean(p));
        const double sd = std::sqrt(g.var_unit(p));
        record(e, fnorm * sd);
        record(e, enorm * sd);
      }
      const CubatureResult c = cubature(g, make_embedding(f.kernel(), 1e-12), integrate_expansion(f, 1e-12));
      const double ie = *c.score * c.R_bc;
      record(ie, fnorm * std::sqrt(c.V));
      record(ie, enorm * std::sqrt(c.V));
    }
    return Outcome{violations == 0, std::to_string(violations) + " violations" +
                                        fmt(", max(error - bound) = %.3e", worst)};
  });

  run(10, 0.0, [&] {
    double bessel = 0.0;
    for (int i = 1; i <= 40; ++i) {
      const double nu = 0.2 * i;
      for (int j = 0; j < 40; ++j) {
        const double x = 1e-3 * std::pow(6e4, j / 39.0);
        const double ref = oracle::bessel_k(nu, x);
        bessel = std::max(bessel, std::abs(specfun::bessel_k(nu, x).value - ref) / ref);
      }
    }
    double gam = 0.0;
    for (int i = 1; i <= 1000; ++i) {
      const double x = 0.05 * i;
      const double ref = oracle::gamma(x);
      gam = std::max(gam, std::abs(specfun::gamma(x) - ref) / ref);
    }
    double resid = 0.0;
    for (int i = 1; i < 4096; ++i) {
      const double p = i / 4096.0;
      resid = std::max(resid, std::abs(specfun::norm_cdf(specfun::inv_norm_cdf(p)) - p));
    }
    for (double p : {1e-300, 1e-100, 1e-20, 1e-10, 1e-5, 1 - 1e-5, 1 - 1e-10}) {
      resid = std::max(resid, std::abs(specfun::norm_cdf(specfun::inv_norm_cdf(p)) - p));
    }
    const bool ok = bessel <= 1e-10 && gam <= 1e-13 && resid <= 1e-12;
    return Outcome{ok, fmt("bessel_k rel %.3e", bessel) + fmt(", gamma rel %.3e", gam) +
                           fmt(", inv_norm_cdf residual %.3e", resid)};
  });

  run(11, 0.0, [&] {
    std::mt19937_64 rng(1111);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double at_data = 0.0;
    double invariance = 0.0;
    double in_ulps = 0.0;
    bool identical = true;
    for (int t = 0; t < 20; ++t) {
      const double nu = std::vector<double>{0.5, 1.5, 2.5}[rng() % 3];
      const FunctionExpansion f = random_expansion(rng, nu, 0.2 + 0.2 * u(rng));
      const int n = 4 + static_cast<int>(rng() % 20);
      const PointSet x = make_design(Design::van_der_corput, n, 1);
      const std::vector<double> fx = observe(f, x);
      const GpFit g = fit(f.kernel(), x, fx);
      for (std::size_t i = 0; i < x.size(); ++i) {
        const std::vector<double> p{x[i][0]};
        at_data = std::max(at_data, std::abs(g.standard_score(p, fx[i]) - 1.0));
      }
      std::vector<double> other(fx.size());
      for (double& v : other) v = 2.0 * u(rng) - 1.0;
      const GpFit h = fit(f.kernel(), x, other);
      for (double lambda : {-3.0, 0.1, 7.0}) {
        std::vector<double> scaled = fx;
        for (double& v : scaled) v *= lambda;
        const GpFit gl = fit(f.kernel(), x, scaled);
        for (int k = 0; k < 50; ++k) {
          const std::vector<double> p{u(rng)};
          const double truth = eval_expansion(f, p);
          const double s = g.standard_score(p, truth);
          const double sl = gl.standard_score(p, lambda * truth);
          invariance = std::max(invariance, std::abs(sl - s) / std::max(1.0, std::abs(s)));
          // Change of the score caused by one-ulp perturbations of truth and mean.
          const double ulp_score = 0x1p-52 * (std::abs(truth) + std::abs(g.mean(p))) /
                                   (g.sigma_ml() * std::sqrt(g.var_unit(p)));
          in_ulps = std::max(in_ulps, std::abs(sl - s) / ulp_score);
          identical = identical && g.var_unit(p) == h.var_unit(p) && g.var_unit(p) == gl.var_unit(p);
        }
      }
    }
    const bool ok = at_data == 0.0 && invariance <= 1e-12 && identical;
    return Outcome{ok, fmt("max |score - 1| at data = %.1e", at_data) +
                           fmt(", max score change under f -> lambda f = %.3e", invariance) +
                           fmt(" (%.1f score ulps)", in_ulps) +
                           (identical ? ", variance bit-identical" : ", variance differs")};
  });

  std::printf("%s: %d criterion(s) failed\n", failures == 0 ? "ALL PASS" : "FAILURES", failures);
  return failures == 0 ? 0 : 1;
}
