#include "gpscale/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <omp.h>

#include "gpscale/error.hpp"
#include "gpscale/pointsets.hpp"

namespace gpscale {

std::vector<double> make_lattice(int resolution, int dim, bool midpoints) {
  if (resolution < 2 || dim < 1 || dim > 2) {
    throw DomainError("make_lattice: need resolution >= 2 and dim in {1, 2}");
  }
  std::vector<double> axis(static_cast<std::size_t>(resolution));
  for (int i = 0; i < resolution; ++i) {
    axis[i] = midpoints ? (i + 0.5) / resolution
                        : static_cast<double>(i) / (resolution - 1);
  }
  if (dim == 1) return axis;
  std::vector<double> coords;
  coords.reserve(2 * axis.size() * axis.size());
  for (double a : axis) {
    for (double b : axis) {
      coords.push_back(a);
      coords.push_back(b);
    }
  }
  return coords;
}

namespace parallel {

Eigen::MatrixXd gram_matrix(const Kernel& kernel, const PointSet& x) {
  const auto n = static_cast<Eigen::Index>(x.size());
  Eigen::MatrixXd gram(n, n);
#pragma omp parallel for schedule(dynamic, 16)
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j <= i; ++j) {
      const double v = kernel.unit(x[i], x[j]);
      gram(i, j) = v;
      gram(j, i) = v;
    }
  }
  return gram;
}

Eigen::MatrixXd cross_kernel(const Kernel& kernel, const PointSet& x,
                             const std::vector<double>& queries) {
  const auto dim = static_cast<std::size_t>(x.dim());
  const auto n = static_cast<Eigen::Index>(x.size());
  const auto m = static_cast<Eigen::Index>(queries.size() / dim);
  Eigen::MatrixXd out(n, m);
#pragma omp parallel for schedule(static)
  for (Eigen::Index j = 0; j < m; ++j) {
    const ConstPoint q(queries.data() + j * dim, dim);
    for (Eigen::Index i = 0; i < n; ++i) out(i, j) = kernel.unit(x[i], q);
  }
  return out;
}

double lattice_fill_distance(const PointSet& x, int resolution) {
  const std::vector<double> lattice = make_lattice(resolution, x.dim(), false);
  const auto dim = static_cast<std::size_t>(x.dim());
  const auto m = static_cast<std::ptrdiff_t>(lattice.size() / dim);
  const std::size_t n = x.size();
  const double* pts = x.coords().data();
  double worst = 0.0;
#pragma omp parallel for schedule(static) reduction(max : worst)
  for (std::ptrdiff_t j = 0; j < m; ++j) {
    const double* q = lattice.data() + j * dim;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
      double s = 0.0;
      for (std::size_t k = 0; k < dim; ++k) {
        const double d = q[k] - pts[i * dim + k];
        s += d * d;
      }
      best = std::min(best, s);
    }
    worst = std::max(worst, best);
  }
  return std::sqrt(worst);
}

std::vector<double> map_points(const std::function<double(ConstPoint)>& fn,
                               const std::vector<double>& coords, int dim) {
  const auto d = static_cast<std::size_t>(dim);
  const auto m = static_cast<std::ptrdiff_t>(coords.size() / d);
  std::vector<double> out(static_cast<std::size_t>(m));
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t j = 0; j < m; ++j) {
    out[j] = fn(ConstPoint(coords.data() + j * d, d));
  }
  return out;
}

}  // namespace parallel
}  // namespace gpscale
