#include "viaccel/problem.hpp"

#include <cmath>
#include <memory>
#include <stdexcept>
#include <string>

namespace viaccel {
namespace {

void check_constants(double mu, double lip) {
  if (!(mu > 0.0) || !std::isfinite(mu)) throw std::invalid_argument("mu must be positive");
  if (!(lip >= mu) || !std::isfinite(lip)) {
    throw std::invalid_argument("lip must be finite and at least mu");
  }
}

void check_dimension(std::size_t n, const Vector& v, const char* what) {
  if (v.size() != n) {
    throw std::invalid_argument(std::string(what) + " has dimension " + std::to_string(v.size()) +
                                ", expected " + std::to_string(n));
  }
}

constexpr double kSolutionTolerance = 1e-9;

}  // namespace

MonotoneProblem::MonotoneProblem(std::size_t dimension, Operator op, FeasibleSet set, double mu,
                                 double lip, Options options)
    : n_(dimension),
      op_(std::move(op)),
      set_(std::move(set)),
      mu_(mu),
      lip_(lip),
      solution_(std::move(options.solution)),
      domain_restricted_(options.domain_restricted),
      label_(std::move(options.label)) {
  if (n_ == 0) throw std::invalid_argument("problem dimension must be positive");
  if (!op_) throw std::invalid_argument("problem operator is empty");
  check_constants(mu_, lip_);
  if (auto d = set_.dimension(); d && *d != n_) {
    throw std::invalid_argument("feasible set dimension does not match the problem");
  }
  if (solution_) {
    check_dimension(n_, *solution_, "solution");
    const double res = natural_residual(*this, *solution_);
    const double bound = kSolutionTolerance * (1.0 + solution_->norm());
    if (!(res <= bound)) {
      throw std::invalid_argument("claimed solution has natural residual " + std::to_string(res) +
                                  " above " + std::to_string(bound));
    }
  }
}

void MonotoneProblem::evaluate(const Vector& z, Vector& out) const {
  check_dimension(n_, z, "operator argument");
  check_dimension(n_, out, "operator output");
  op_(z, out);
}

Vector MonotoneProblem::evaluate(const Vector& z) const {
  Vector out(n_);
  evaluate(z, out);
  return out;
}

MonotoneProblem MonotoneProblem::with_constants(double mu, double lip) const {
  return MonotoneProblem(n_, op_, set_, mu, lip, Options{solution_, domain_restricted_, label_});
}

double natural_residual(const MonotoneProblem& problem, const Vector& z) {
  return natural_residual(problem, z, problem.evaluate(z));
}

double natural_residual(const MonotoneProblem& problem, const Vector& z, const Vector& fz) {
  Vector w(z.size());
  linear_combination(1.0, z, -1.0, fz, w);
  problem.set().project_into(w, w);
  return distance(z, w);
}

SmoothObjective::SmoothObjective(std::size_t dimension, Value value, Gradient gradient, double mu,
                                 double lip, Options options)
    : n_(dimension),
      value_(std::move(value)),
      gradient_(std::move(gradient)),
      mu_(mu),
      lip_(lip),
      minimizer_(std::move(options.minimizer)),
      optimal_value_(options.optimal_value),
      gap_(std::move(options.gap)),
      label_(std::move(options.label)) {
  if (n_ == 0) throw std::invalid_argument("objective dimension must be positive");
  if (!value_ || !gradient_) throw std::invalid_argument("objective callbacks are empty");
  check_constants(mu_, lip_);
  if (minimizer_) check_dimension(n_, *minimizer_, "minimizer");
  if (optimal_value_ && !std::isfinite(*optimal_value_)) {
    throw std::invalid_argument("optimal value is not finite");
  }
}

double SmoothObjective::value(const Vector& x) const {
  check_dimension(n_, x, "objective argument");
  return value_(x);
}

void SmoothObjective::gradient(const Vector& x, Vector& out) const {
  check_dimension(n_, x, "gradient argument");
  check_dimension(n_, out, "gradient output");
  gradient_(x, out);
}

Vector SmoothObjective::gradient(const Vector& x) const {
  Vector out(n_);
  gradient(x, out);
  return out;
}

std::optional<double> SmoothObjective::suboptimality(const Vector& x) const {
  if (gap_) {
    check_dimension(n_, x, "objective argument");
    return gap_(x);
  }
  if (optimal_value_) return value(x) - *optimal_value_;
  return std::nullopt;
}

SmoothObjective SmoothObjective::with_reference(Vector minimizer, double optimal_value) const {
  return SmoothObjective(n_, value_, gradient_, mu_, lip_,
                         Options{std::move(minimizer), optimal_value, gap_, label_});
}

SmoothObjective SmoothObjective::with_constants(double mu, double lip) const {
  return SmoothObjective(n_, value_, gradient_, mu, lip,
                         Options{minimizer_, optimal_value_, gap_, label_});
}

MonotoneProblem gradient_problem(const SmoothObjective& objective) {
  auto obj = std::make_shared<const SmoothObjective>(objective);
  Operator op = [obj](const Vector& z, Vector& out) { obj->gradient(z, out); };
  return MonotoneProblem(objective.dimension(), std::move(op), FeasibleSet::whole_space(),
                         objective.mu(), objective.lip(),
                         MonotoneProblem::Options{objective.minimizer(), false, objective.label()});
}

}  // namespace viaccel
