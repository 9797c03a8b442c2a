#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>

#include "viaccel/problem.hpp"
#include "viaccel/vector.hpp"

namespace viaccel {

// out = M x
using LinearMap = std::function<void(const Vector& x, Vector& out)>;

// Estimate of ||M||_2 by power iteration on M^T M from a seeded random start.
//
// `apply_transposed` may be empty for symmetric maps. The estimate is the
// largest ||M v|| seen over unit iterates, so it never exceeds the true norm
// (up to rounding) and approaches it like (s2/s1)^(2 iters), where s1 > s2 are
// the two largest singular values; a start vector nearly orthogonal to the top
// singular vector delays this further. A zero map yields 0.
double power_iteration_norm(const LinearMap& apply, const LinearMap& apply_transposed,
                            std::size_t n, std::size_t iters, std::uint64_t seed);
double power_iteration_norm(const Matrix& m, std::size_t iters, std::uint64_t seed);

// Central differences, one coordinate at a time.
Vector finite_diff_grad(const SmoothObjective& objective, const Vector& x, double step);

// Central-difference Jacobian of F at z (column j from z +- step e_j).
Matrix finite_diff_jacobian(const MonotoneProblem& problem, const Vector& z, double step);

}  // namespace viaccel
