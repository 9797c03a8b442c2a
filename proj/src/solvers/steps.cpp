#include "viaccel/steps.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace viaccel {
namespace {

void require_positive(double v, const char* name) {
  if (!(v > 0.0)) throw std::invalid_argument(std::string(name) + " must be positive");
}

void require_nonnegative(double v, const char* name) {
  if (!(v >= 0.0)) throw std::invalid_argument(std::string(name) + " must be nonnegative");
}

void require_restricted(const MonotoneProblem& problem, bool restricted) {
  if (problem.domain_restricted() && !restricted) {
    throw std::invalid_argument(
        "the operator is only defined on the feasible set; use the restricted variant");
  }
}

// Shift history and evaluate F at the new point.
ViState advance(const MonotoneProblem& problem, const ViState& s, Vector z_next) {
  Vector f_next(z_next.size());
  problem.evaluate(z_next, f_next);
  return ViState{std::move(z_next), s.z_curr, std::move(f_next), s.f_curr, s.k + 1};
}

Vector difference(const Vector& a, const Vector& b) {
  Vector d(a.size());
  linear_combination(1.0, a, -1.0, b, d);
  return d;
}

}  // namespace

ViState ViState::initial(const MonotoneProblem& problem, const Vector& z0) {
  if (z0.size() != problem.dimension()) {
    throw std::invalid_argument("initial point has the wrong dimension");
  }
  if (problem.domain_restricted() && !problem.set().contains(z0)) {
    throw std::invalid_argument("initial point must be feasible for a domain-restricted operator");
  }
  Vector f0 = problem.evaluate(z0);
  return ViState{z0, z0, f0, f0, 0};
}

ViState step_vanilla(const MonotoneProblem& problem, const ViState& s, double alpha) {
  require_positive(alpha, "alpha");
  Vector w = s.z_curr;
  w.axpy(-alpha, s.f_curr);
  problem.set().project_into(w, w);
  return advance(problem, s, std::move(w));
}

ViState step_extragradient(const MonotoneProblem& problem, const ViState& s, double alpha,
                           double eta, bool restricted, HalfStep* half) {
  require_positive(alpha, "alpha");
  require_positive(eta, "eta");
  require_restricted(problem, restricted);
  Vector zh = s.z_curr;
  zh.axpy(-eta, s.f_curr);
  if (restricted) problem.set().project_into(zh, zh);
  Vector fh = problem.evaluate(zh);
  Vector w = s.z_curr;
  w.axpy(-alpha, fh);
  problem.set().project_into(w, w);
  if (half) *half = HalfStep{std::move(zh), std::move(fh)};
  return advance(problem, s, std::move(w));
}

ViState step_ogda(const MonotoneProblem& problem, const ViState& s, double alpha, double tau) {
  require_positive(alpha, "alpha");
  require_nonnegative(tau, "tau");
  const Vector df = difference(s.f_curr, s.f_prev);
  Vector w = s.z_curr;
  w.axpy(-alpha, s.f_curr);
  w.axpy(-tau, df);
  problem.set().project_into(w, w);
  return advance(problem, s, std::move(w));
}

ViState step_heavy_ball(const MonotoneProblem& problem, const ViState& s, double alpha,
                        double gamma) {
  require_positive(alpha, "alpha");
  require_nonnegative(gamma, "gamma");
  const Vector d = difference(s.z_curr, s.z_prev);
  Vector w = s.z_curr;
  w.axpy(-alpha, s.f_curr);
  w.axpy(gamma, d);
  problem.set().project_into(w, w);
  return advance(problem, s, std::move(w));
}

ViState step_nesterov(const MonotoneProblem& problem, const ViState& s, double alpha, double beta,
                      HalfStep* half) {
  require_positive(alpha, "alpha");
  require_nonnegative(beta, "beta");
  require_restricted(problem, false);
  const Vector d = difference(s.z_curr, s.z_prev);
  Vector zh = s.z_curr;
  zh.axpy(beta, d);
  Vector fh = problem.evaluate(zh);
  Vector w = s.z_curr;
  w.axpy(-alpha, fh);
  w.axpy(beta, d);
  problem.set().project_into(w, w);
  if (half) *half = HalfStep{std::move(zh), std::move(fh)};
  return advance(problem, s, std::move(w));
}

ViState step_extra_point(const MonotoneProblem& problem, const ViState& s, const ViParams& p,
                         bool restricted, HalfStep* half) {
  p.validate();
  require_restricted(problem, restricted);
  const Vector d = difference(s.z_curr, s.z_prev);
  const Vector df = difference(s.f_curr, s.f_prev);
  Vector zh = s.z_curr;
  zh.axpy(p.beta, d);
  zh.axpy(-p.eta, s.f_curr);
  if (restricted) problem.set().project_into(zh, zh);
  Vector fh = problem.evaluate(zh);
  Vector w = s.z_curr;
  w.axpy(-p.alpha, fh);
  w.axpy(p.gamma, d);
  w.axpy(-p.tau, df);
  problem.set().project_into(w, w);
  if (half) *half = HalfStep{std::move(zh), std::move(fh)};
  return advance(problem, s, std::move(w));
}

ViState step(const MonotoneProblem& problem, const ViState& s, ViMethod method,
             const ViParams& p, bool restricted, HalfStep* half) {
  switch (method) {
    case ViMethod::Vanilla:
      return step_vanilla(problem, s, p.alpha);
    case ViMethod::Extragradient:
      return step_extragradient(problem, s, p.alpha, p.eta, restricted, half);
    case ViMethod::Ogda:
      return step_ogda(problem, s, p.alpha, p.tau);
    case ViMethod::HeavyBall:
      return step_heavy_ball(problem, s, p.alpha, p.gamma);
    case ViMethod::Nesterov:
      return step_nesterov(problem, s, p.alpha, p.beta, half);
    case ViMethod::ExtraPoint:
      return step_extra_point(problem, s, p, restricted, half);
  }
  throw std::invalid_argument("unknown method");
}

OptState OptState::initial(const Vector& x0) { return OptState{x0, x0, 0}; }

OptState step_opt_extra_point(const SmoothObjective& objective, const OptState& s,
                              const OptParams& p, YRule y_rule, OptStepDetail* detail) {
  p.validate();
  const double inv_l = 1.0 / objective.lip();
  const std::size_t n = objective.dimension();

  Vector pk(n);
  linear_combination(p.ti(1), s.x_curr, p.ti(2), s.v_curr, pk);

  Vector y = pk;
  Vector gy(n);
  if (y_rule == YRule::YGradStep) {
    objective.gradient(pk, gy);
    y.axpy(-inv_l, gy);
  }
  objective.gradient(y, gy);

  Vector z = y;
  z.axpy(-p.ti(3) * inv_l, gy);
  Vector gz = objective.gradient(z);

  const Vector dg = gz - gy;
  const Vector dz = z - y;
  Vector x_next = y;
  x_next.axpy(-p.ti(4) * inv_l, gz);
  x_next.axpy(-p.ti(5) * inv_l, dg);
  x_next.axpy(p.ti(6), dz);

  Vector v_next(n);
  linear_combination(p.ti(7), s.v_curr, p.ti(8), y, v_next);
  v_next.axpy(-p.ti(9), gy);

  if (detail) *detail = OptStepDetail{std::move(pk), std::move(y), std::move(z), std::move(gy), std::move(gz)};
  return OptState{std::move(x_next), std::move(v_next), s.k + 1};
}

OptState step_opt_simplified(const SmoothObjective& objective, const OptState& s, double delta) {
  if (!(delta > 0.0 && delta < 1.0)) throw std::invalid_argument("delta must lie in (0, 1)");
  const double mu = objective.mu();
  const double lip = objective.lip();
  const double theta = std::sqrt(mu / lip);
  const double q = (1.0 + delta) * (1.0 + delta);
  const std::size_t n = objective.dimension();

  Vector y(n);
  linear_combination(1.0 / (1.0 + theta), s.x_curr, theta / (1.0 + theta), s.v_curr, y);
  const Vector gy = objective.gradient(y);
  Vector z = y;
  z.axpy(-delta / lip, gy);
  const Vector gz = objective.gradient(z);

  Vector x_next = y;
  x_next.axpy(-(1.0 - delta) / (q * lip), gz);
  x_next.axpy(-1.0 / (q * lip), gz - gy);
  x_next.axpy(3.0 / q, z - y);

  Vector v_next(n);
  linear_combination(1.0 - theta, s.v_curr, theta * (mu * delta - lip) / (mu * delta), y, v_next);
  v_next.axpy(theta * lip / (mu * delta), z);
  return OptState{std::move(x_next), std::move(v_next), s.k + 1};
}

}  // namespace viaccel
