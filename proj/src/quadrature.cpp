#include "gpscale/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <queue>

#include "gpscale/error.hpp"

namespace gpscale::quadrature {
namespace {

constexpr int kRuleOrder = 10;
constexpr int kMaxPanels = 20000;

const GaussLegendreRule& default_rule() {
  static const GaussLegendreRule rule = gauss_legendre(kRuleOrder);
  return rule;
}

double apply(const GaussLegendreRule& rule, const Integrand& f, double a, double b) {
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  double acc = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    acc += rule.weights[i] * f(mid + half * rule.nodes[i]);
  }
  return half * acc;
}

struct Panel {
  double a;
  double b;
  double value;  // two-half estimate
  double error;

  bool operator<(const Panel& other) const { return error < other.error; }
};

Panel make_panel(const Integrand& f, double a, double b) {
  const GaussLegendreRule& rule = default_rule();
  const double m = 0.5 * (a + b);
  const double whole = apply(rule, f, a, b);
  const double halves = apply(rule, f, a, m) + apply(rule, f, m, b);
  return {a, b, halves, std::abs(halves - whole)};
}

}  // namespace

GaussLegendreRule gauss_legendre(int n) {
  if (n < 1) throw DomainError("gauss_legendre: need at least one node");
  GaussLegendreRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = pk;
      }
      if (n == 1) p0 = 1.0;
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // Recompute the derivative at the converged node for the weight.
    double p0 = 1.0;
    double p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = pk;
    }
    dp = n * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

AdaptiveResult integrate_adaptive(const Integrand& f, double a, double b, double tol) {
  if (!(b > a)) return {0.0, 0.0, 0};
  std::priority_queue<Panel> queue;
  Panel first = make_panel(f, a, b);
  double error = first.error;
  queue.push(first);
  int panels = 1;
  while (error > tol) {
    if (panels >= kMaxPanels) {
      throw NumericalError("integrate_adaptive: tolerance not reached within the panel budget");
    }
    const Panel worst = queue.top();
    queue.pop();
    const double m = 0.5 * (worst.a + worst.b);
    if (!(m > worst.a && m < worst.b)) {
      throw NumericalError("integrate_adaptive: panel collapsed below machine resolution");
    }
    const Panel left = make_panel(f, worst.a, m);
    const Panel right = make_panel(f, m, worst.b);
    error += left.error + right.error - worst.error;
    queue.push(left);
    queue.push(right);
    ++panels;
  }
  // Sum the accepted panels left to right so the result is independent of
  // heap order.
  double sum = 0.0;
  double err = 0.0;
  std::vector<Panel> done;
  done.reserve(queue.size());
  while (!queue.empty()) {
    done.push_back(queue.top());
    queue.pop();
  }
  std::sort(done.begin(), done.end(), [](const Panel& l, const Panel& r) { return l.a < r.a; });
  for (const Panel& p : done) {
    sum += p.value;
    err += p.error;
  }
  return {sum, err, panels};
}

double integrate(const Integrand& f, double a, double b, double tol,
                 std::span<const double> breakpoints) {
  std::vector<double> cuts{a};
  for (double c : breakpoints) {
    if (c > a && c < b) cuts.push_back(c);
  }
  cuts.push_back(b);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  const double share = tol / static_cast<double>(cuts.size() - 1);
  double sum = 0.0;
  for (std::size_t i = 1; i < cuts.size(); ++i) {
    sum += integrate_adaptive(f, cuts[i - 1], cuts[i], share).value;
  }
  return sum;
}

double integrate_2d(const std::function<double(double, double)>& f, double ax, double bx,
                    double ay, double by, double tol) {
  const double inner_tol = tol / 100.0;
  auto inner = [&](double x) {
    return integrate_adaptive([&](double y) { return f(x, y); }, ay, by, inner_tol).value;
  };
  return integrate_adaptive(inner, ax, bx, tol).value;
}

}  // namespace gpscale::quadrature
