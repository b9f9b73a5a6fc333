#include "gpscale/pointsets.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "gpscale/error.hpp"
#include "gpscale/parallel.hpp"

namespace gpscale {

PointSet::PointSet(std::vector<double> coords, int dim, Provenance provenance)
    : coords_(std::move(coords)), dim_(dim), provenance_(provenance) {
  if (dim_ < 1 || dim_ > 2) throw DomainError("PointSet: dimension must be 1 or 2");
  if (coords_.empty() || coords_.size() % static_cast<std::size_t>(dim_) != 0) {
    throw DomainError("PointSet: need a positive whole number of points");
  }
  for (double c : coords_) {
    if (!(c >= 0.0 && c <= 1.0)) throw DomainError("PointSet: coordinates must lie in [0, 1]");
  }
  std::vector<std::size_t> order(size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  auto less = [this](std::size_t a, std::size_t b) {
    const ConstPoint pa = (*this)[a];
    const ConstPoint pb = (*this)[b];
    return std::lexicographical_compare(pa.begin(), pa.end(), pb.begin(), pb.end());
  };
  std::sort(order.begin(), order.end(), less);
  for (std::size_t k = 1; k < order.size(); ++k) {
    if (!less(order[k - 1], order[k])) throw DomainError("PointSet: points must be distinct");
  }
}

PointSet uniform_grid(int n) {
  if (n < 2) throw DomainError("uniform_grid: N must be at least 2");
  std::vector<double> pts(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pts[i] = static_cast<double>(i) / (n - 1);
  return PointSet(std::move(pts), 1, Provenance::uniform_grid);
}

double radical_inverse_base2(std::uint64_t index) {
  double value = 0.0;
  double base = 0.5;
  for (; index != 0; index >>= 1, base *= 0.5) {
    if (index & 1U) value += base;
  }
  return value;
}

PointSet van_der_corput(int n) {
  if (n < 1) throw DomainError("van_der_corput: N must be at least 1");
  std::vector<double> pts(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pts[i] = radical_inverse_base2(static_cast<std::uint64_t>(i));
  return PointSet(std::move(pts), 1, Provenance::van_der_corput);
}

PointSet cartesian_product(const PointSet& axis, int dim) {
  if (axis.dim() != 1) throw DomainError("cartesian_product: axis must be one-dimensional");
  if (dim == 1) return PointSet(axis.coords(), 1, Provenance::cartesian_product);
  if (dim != 2) throw DomainError("cartesian_product: only dim in {1, 2} is supported");
  const std::vector<double>& a = axis.coords();
  std::vector<double> pts;
  pts.reserve(2 * a.size() * a.size());
  for (double u : a) {
    for (double v : a) {
      pts.push_back(u);
      pts.push_back(v);
    }
  }
  return PointSet(std::move(pts), 2, Provenance::cartesian_product);
}

double separation_radius(const PointSet& x) {
  if (x.size() < 2) throw DomainError("separation_radius: need at least two points");
  if (x.dim() == 1) {
    std::vector<double> s = x.coords();
    std::sort(s.begin(), s.end());
    double gap = std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i < s.size(); ++i) gap = std::min(gap, s[i] - s[i - 1]);
    return 0.5 * gap;
  }
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      double s = 0.0;
      for (int k = 0; k < x.dim(); ++k) {
        const double d = x[i][k] - x[j][k];
        s += d * d;
      }
      best = std::min(best, s);
    }
  }
  return 0.5 * std::sqrt(best);
}

double fill_distance(const PointSet& x, int resolution) {
  if (x.dim() == 1) {
    // Largest empty interval: the two boundary gaps and half of each interior gap.
    std::vector<double> s = x.coords();
    std::sort(s.begin(), s.end());
    double h = std::max(s.front(), 1.0 - s.back());
    for (std::size_t i = 1; i < s.size(); ++i) h = std::max(h, 0.5 * (s[i] - s[i - 1]));
    return h;
  }
  return parallel::lattice_fill_distance(x, resolution);
}

Geometry geometry(const PointSet& x, int resolution) {
  if (x.size() < 2) throw DomainError("geometry: need at least two points");
  if (resolution < 64) throw DomainError("geometry: lattice resolution must be at least 64");
  Geometry g;
  g.separation_radius = separation_radius(x);
  g.fill_distance = fill_distance(x, resolution);
  g.mesh_ratio = g.fill_distance / g.separation_radius;
  return g;
}

int default_geometry_resolution(int dim) { return dim == 1 ? 512 : 256; }

}  // namespace gpscale
