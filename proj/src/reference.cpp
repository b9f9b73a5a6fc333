#include "gpscale/reference.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gpscale/parallel.hpp"
#include "gpscale/pointsets.hpp"

namespace gpscale::reference {

Eigen::MatrixXd gram_matrix(const Kernel& kernel, const PointSet& x) {
  const auto n = static_cast<Eigen::Index>(x.size());
  Eigen::MatrixXd gram(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j <= i; ++j) {
      gram(i, j) = gram(j, i) = kernel.unit(x[i], x[j]);
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
  for (Eigen::Index j = 0; j < m; ++j) {
    const ConstPoint q(queries.data() + j * dim, dim);
    for (Eigen::Index i = 0; i < n; ++i) out(i, j) = kernel.unit(x[i], q);
  }
  return out;
}

double lattice_fill_distance(const PointSet& x, int resolution) {
  const std::vector<double> lattice = make_lattice(resolution, x.dim(), false);
  const auto dim = static_cast<std::size_t>(x.dim());
  double worst = 0.0;
  for (std::size_t j = 0; j < lattice.size() / dim; ++j) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < x.size(); ++i) {
      double s = 0.0;
      for (std::size_t k = 0; k < dim; ++k) {
        const double d = lattice[j * dim + k] - x[i][k];
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
  std::vector<double> out;
  out.reserve(coords.size() / d);
  for (std::size_t j = 0; j < coords.size() / d; ++j) {
    out.push_back(fn(ConstPoint(coords.data() + j * d, d)));
  }
  return out;
}

}  // namespace gpscale::reference
