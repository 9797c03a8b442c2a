#pragma once

#include <Eigen/Dense>

#include "viaccel/vector.hpp"

namespace viaccel::detail {

using RowMajorMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

inline Eigen::Map<const RowMajorMatrix> as_eigen(const Matrix& m) {
  return {m.data(), static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols())};
}

inline Eigen::Map<const Eigen::VectorXd> as_eigen(const Vector& v) {
  return {v.data(), static_cast<Eigen::Index>(v.size())};
}

inline Vector from_eigen(const Eigen::VectorXd& v) {
  return Vector(std::vector<double>(v.data(), v.data() + v.size()));
}

}  // namespace viaccel::detail
