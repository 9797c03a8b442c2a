#pragma once

#include <string_view>

#include "viaccel/problem.hpp"
#include "viaccel/vector.hpp"

namespace viaccel {

struct Merit {
  double primary;
  double aux;
};

// Unconstrained: (||F(z)||, natural residual).
// Constrained:   (|z^T F(z)|, natural residual).
Merit merit(const MonotoneProblem& problem, const Vector& z, const Vector& fz);
Merit merit(const MonotoneProblem& problem, const Vector& z);

// (||grad f(x)||, f(x) - f*) when f* is known, else (||grad f(x)||, f(x)).
Merit merit(const SmoothObjective& objective, const Vector& x, const Vector& grad);
Merit merit(const SmoothObjective& objective, const Vector& x);

// Column labels recorded in trace metadata.
std::string_view primary_merit_name(const MonotoneProblem& problem) noexcept;
std::string_view aux_merit_name(const SmoothObjective& objective) noexcept;

}  // namespace viaccel
