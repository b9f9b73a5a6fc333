#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "gpscale/kernels.hpp"

namespace gpscale {

enum class Provenance { uniform_grid, van_der_corput, cartesian_product, explicit_points };

/// N pairwise-distinct points in [0,1]^d (d <= 2), kept in generation order.
class PointSet {
 public:
  /// Row-major coordinates. Throws DomainError if a point leaves [0,1]^d,
  /// two points coincide, or the set is empty.
  PointSet(std::vector<double> coords, int dim, Provenance provenance = Provenance::explicit_points);

  std::size_t size() const { return coords_.size() / static_cast<std::size_t>(dim_); }
  int dim() const { return dim_; }
  Provenance provenance() const { return provenance_; }
  const std::vector<double>& coords() const { return coords_; }

  ConstPoint operator[](std::size_t i) const {
    return {coords_.data() + i * static_cast<std::size_t>(dim_), static_cast<std::size_t>(dim_)};
  }

 private:
  std::vector<double> coords_;
  int dim_;
  Provenance provenance_;
};

struct Geometry {
  double fill_distance = 0.0;      // h_X
  double separation_radius = 0.0;  // q_X
  double mesh_ratio = 0.0;         // h_X / q_X
};

/// {0, 1/(N-1), ..., 1}.
PointSet uniform_grid(int n);

/// First N terms of the base-2 radical-inverse sequence 0, 1/2, 1/4, 3/4, ...
PointSet van_der_corput(int n);

/// All dim-fold tuples of a one-dimensional axis set, first coordinate slowest.
PointSet cartesian_product(const PointSet& axis, int dim);

/// Base-2 radical inverse of `index` (bit reversal about the binary point).
double radical_inverse_base2(std::uint64_t index);

/// Half the minimum pairwise distance. Needs N >= 2.
double separation_radius(const PointSet& x);

/// sup over [0,1]^d of the distance to the nearest point. Exact in one
/// dimension; in two dimensions the sup is taken over a resolution^2 node
/// lattice (OpenMP), within sqrt(d)/(resolution - 1) of the true value.
double fill_distance(const PointSet& x, int resolution);

/// Fill distance, separation radius and mesh ratio. Needs N >= 2 and
/// resolution >= 64.
Geometry geometry(const PointSet& x, int resolution);

/// 512 per axis in one dimension, 256 in two.
int default_geometry_resolution(int dim);

}  // namespace gpscale
