#pragma once

#include <Eigen/Dense>

namespace ppve {

// Spatial dimension d and covariate dimension p are both small (<= 6 in
// every supported model); fixed-capacity Eigen types keep the hot loops
// allocation-free.
inline constexpr int kMaxDim = 8;

using Vec = Eigen::Matrix<double, Eigen::Dynamic, 1, Eigen::ColMajor, kMaxDim, 1>;
using Mat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::ColMajor,
                          kMaxDim, kMaxDim>;

}  // namespace ppve
