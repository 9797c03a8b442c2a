#include "viaccel/merit.hpp"

#include <cmath>

namespace viaccel {

Merit merit(const MonotoneProblem& problem, const Vector& z, const Vector& fz) {
  const double res = natural_residual(problem, z, fz);
  if (problem.set().is_whole_space()) return Merit{fz.norm(), res};
  return Merit{std::abs(z.dot(fz)), res};
}

Merit merit(const MonotoneProblem& problem, const Vector& z) {
  return merit(problem, z, problem.evaluate(z));
}

Merit merit(const SmoothObjective& objective, const Vector& x, const Vector& grad) {
  if (auto gap = objective.suboptimality(x)) return Merit{grad.norm(), *gap};
  return Merit{grad.norm(), objective.value(x)};
}

Merit merit(const SmoothObjective& objective, const Vector& x) {
  return merit(objective, x, objective.gradient(x));
}

std::string_view primary_merit_name(const MonotoneProblem& problem) noexcept {
  return problem.set().is_whole_space() ? "operator-norm" : "complementarity";
}

std::string_view aux_merit_name(const SmoothObjective& objective) noexcept {
  return objective.optimal_value() ? "suboptimality" : "objective";
}

}  // namespace viaccel
