#pragma once

#include <cstddef>
#include <map>
#include <string>

#include "viaccel/problem.hpp"

namespace viaccel {

struct ReferenceOptimum {
  // The input objective carrying the computed minimizer and optimal value.
  SmoothObjective objective;
  std::size_t iterations = 0;
  double grad_norm = 0.0;
  // Details of the reference run, for trace metadata.
  std::map<std::string, std::string> metadata;
};

// Runs the optimization scheme with default parameters from x0 until
// ||grad f|| <= grad_tol. Throws std::runtime_error if max_iter is reached.
ReferenceOptimum reference_optimum(const SmoothObjective& objective, const Vector& x0,
                                   double grad_tol = 1e-12, std::size_t max_iter = 2000000);

}  // namespace viaccel
