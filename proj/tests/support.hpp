#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <cstddef>
#include <vector>

#include "viaccel/feasible_set.hpp"
#include "viaccel/problem.hpp"
#include "viaccel/vector.hpp"

namespace viaccel::testing {

// F(z) = s z + shift, componentwise.
inline MonotoneProblem scaled_identity(std::size_t n, double s, double shift, FeasibleSet set,
                                       std::optional<Vector> solution = std::nullopt) {
  MonotoneProblem::Options opts;
  opts.solution = std::move(solution);
  return MonotoneProblem(
      n,
      [s, shift](const Vector& z, Vector& out) {
        for (std::size_t i = 0; i < z.size(); ++i) out[i] = s * z[i] + shift;
      },
      std::move(set), s, s, std::move(opts));
}

inline Vector vec(std::initializer_list<double> v) { return Vector(v); }

inline Eigen::MatrixXd to_eigen(const Matrix& m) {
  Eigen::MatrixXd out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c);
  }
  return out;
}

inline Eigen::VectorXd to_eigen(const Vector& v) {
  return Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size()));
}

inline double rel_diff(const Vector& a, const Vector& b) {
  return distance(a, b) / std::max(1.0, std::max(a.norm(), b.norm()));
}

}  // namespace viaccel::testing
