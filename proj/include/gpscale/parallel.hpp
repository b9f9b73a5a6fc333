#pragma once

// OpenMP data-parallel kernels. Every routine here has a serial twin in
// reference.hpp with the same signature; the two must agree bit for bit,
// which holds because each output element is computed by one thread in a
// fixed operation order and reductions are folded serially afterwards.

#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "gpscale/kernels.hpp"

namespace gpscale {

class PointSet;

/// Row-major coordinates of a resolution^dim node lattice on [0,1]^dim.
/// `midpoints` selects cell centres (i + 1/2)/resolution instead of nodes
/// i/(resolution - 1).
std::vector<double> make_lattice(int resolution, int dim, bool midpoints);

namespace parallel {

/// Unit-scale Gram matrix K_X (full, symmetric).
Eigen::MatrixXd gram_matrix(const Kernel& kernel, const PointSet& x);

/// Unit-scale cross-kernel matrix with entry (i, j) = K(x_i, q_j) for
/// row-major query coordinates.
Eigen::MatrixXd cross_kernel(const Kernel& kernel, const PointSet& x,
                             const std::vector<double>& queries);

/// max over lattice nodes of the distance to the nearest point of `x`.
double lattice_fill_distance(const PointSet& x, int resolution);

/// Evaluates `fn` at every row-major point of `coords`.
std::vector<double> map_points(const std::function<double(ConstPoint)>& fn,
                               const std::vector<double>& coords, int dim);

}  // namespace parallel
}  // namespace gpscale
