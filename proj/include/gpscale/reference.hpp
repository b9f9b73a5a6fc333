#pragma once

// Serial reference implementations of the kernels in parallel.hpp. Kept for
// testing and benchmarking; the library itself calls the parallel versions.

#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "gpscale/kernels.hpp"

namespace gpscale {

class PointSet;

namespace reference {

Eigen::MatrixXd gram_matrix(const Kernel& kernel, const PointSet& x);
Eigen::MatrixXd cross_kernel(const Kernel& kernel, const PointSet& x,
                             const std::vector<double>& queries);
double lattice_fill_distance(const PointSet& x, int resolution);
std::vector<double> map_points(const std::function<double(ConstPoint)>& fn,
                               const std::vector<double>& coords, int dim);

}  // namespace reference
}  // namespace gpscale
