#pragma once

#include <Eigen/Dense>

namespace cmgen {

template <typename Scalar = double>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Row-major so that one embedding is one contiguous row.
template <typename Scalar = double>
using RowMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

}  // namespace cmgen
