#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>

#include "viaccel/feasible_set.hpp"
#include "viaccel/vector.hpp"

namespace viaccel {

// out = F(z). `out` has the problem dimension and never aliases `z`.
using Operator = std::function<void(const Vector& z, Vector& out)>;

// Strongly monotone, Lipschitz variational inequality: find z* in Z with
// F(z*)^T (z - z*) >= 0 for all z in Z.
//
// Immutable after construction; the constructor enforces 0 < mu <= lip and,
// when a solution is supplied, that its natural residual is at most
// 1e-9 (1 + ||z*||).
class MonotoneProblem {
 public:
  struct Options {
    std::optional<Vector> solution;
    bool domain_restricted = false;
    std::string label;
  };

  MonotoneProblem(std::size_t dimension, Operator op, FeasibleSet set, double mu, double lip,
                  Options options);
  MonotoneProblem(std::size_t dimension, Operator op, FeasibleSet set, double mu, double lip)
      : MonotoneProblem(dimension, std::move(op), std::move(set), mu, lip, Options{}) {}

  std::size_t dimension() const noexcept { return n_; }
  const FeasibleSet& set() const noexcept { return set_; }
  double mu() const noexcept { return mu_; }
  double lip() const noexcept { return lip_; }
  double sigma() const noexcept { return mu_ / lip_; }
  double kappa() const noexcept { return lip_ / mu_; }
  const std::optional<Vector>& solution() const noexcept { return solution_; }
  bool domain_restricted() const noexcept { return domain_restricted_; }
  const std::string& label() const noexcept { return label_; }
  const Operator& op() const noexcept { return op_; }

  void evaluate(const Vector& z, Vector& out) const;
  Vector evaluate(const Vector& z) const;

  // Same operator and set with different claimed constants (used to override L).
  MonotoneProblem with_constants(double mu, double lip) const;

 private:
  std::size_t n_;
  Operator op_;
  FeasibleSet set_;
  double mu_;
  double lip_;
  std::optional<Vector> solution_;
  bool domain_restricted_;
  std::string label_;
};

// ||z - P_Z(z - F(z))||, zero exactly at solutions.
double natural_residual(const MonotoneProblem& problem, const Vector& z);
double natural_residual(const MonotoneProblem& problem, const Vector& z, const Vector& fz);

// Strongly convex, L-smooth objective on R^n.
class SmoothObjective {
 public:
  using Value = std::function<double(const Vector& x)>;
  using Gradient = std::function<void(const Vector& x, Vector& out)>;
  // f(x) - f* evaluated without cancellation where the family allows it.
  using Gap = std::function<double(const Vector& x)>;

  struct Options {
    std::optional<Vector> minimizer;
    std::optional<double> optimal_value;
    Gap gap;
    std::string label;
  };

  SmoothObjective(std::size_t dimension, Value value, Gradient gradient, double mu, double lip,
                  Options options);
  SmoothObjective(std::size_t dimension, Value value, Gradient gradient, double mu, double lip)
      : SmoothObjective(dimension, std::move(value), std::move(gradient), mu, lip, Options{}) {}

  std::size_t dimension() const noexcept { return n_; }
  double mu() const noexcept { return mu_; }
  double lip() const noexcept { return lip_; }
  double sigma() const noexcept { return mu_ / lip_; }
  const std::optional<Vector>& minimizer() const noexcept { return minimizer_; }
  const std::optional<double>& optimal_value() const noexcept { return optimal_value_; }
  const std::string& label() const noexcept { return label_; }

  double value(const Vector& x) const;
  void gradient(const Vector& x, Vector& out) const;
  Vector gradient(const Vector& x) const;
  // f(x) - f*, or nullopt when f* is unknown.
  std::optional<double> suboptimality(const Vector& x) const;

  // Copy with a numerically obtained reference optimum attached.
  SmoothObjective with_reference(Vector minimizer, double optimal_value) const;
  SmoothObjective with_constants(double mu, double lip) const;

 private:
  std::size_t n_;
  Value value_;
  Gradient gradient_;
  double mu_;
  double lip_;
  std::optional<Vector> minimizer_;
  std::optional<double> optimal_value_;
  Gap gap_;
  std::string label_;
};

// The VI with F = grad f over R^n; its solution is the minimizer when known.
MonotoneProblem gradient_problem(const SmoothObjective& objective);

}  // namespace viaccel
