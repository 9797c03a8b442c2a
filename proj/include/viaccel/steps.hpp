#pragma once

#include <cstddef>

#include "viaccel/params.hpp"
#include "viaccel/problem.hpp"
#include "viaccel/vector.hpp"

namespace viaccel {

// (z^k, z^{k-1}) with cached operator values at both points.
struct ViState {
  Vector z_curr;
  Vector z_prev;
  Vector f_curr;
  Vector f_prev;
  std::size_t k = 0;

  // z^{-1} = z^0, so momentum and optimism terms vanish on the first step.
  static ViState initial(const MonotoneProblem& problem, const Vector& z0);
};

// Transient extrapolation point of the two-evaluation methods.
struct HalfStep {
  Vector z_half;
  Vector f_half;
};

// z+ = P(z - alpha F(z))
ViState step_vanilla(const MonotoneProblem& problem, const ViState& s, double alpha);

// half = z - eta F(z) (projected when restricted); z+ = P(z - alpha F(half))
ViState step_extragradient(const MonotoneProblem& problem, const ViState& s, double alpha,
                           double eta, bool restricted, HalfStep* half = nullptr);

// z+ = P(z - alpha F(z) - tau (F(z) - F(z_prev)))
ViState step_ogda(const MonotoneProblem& problem, const ViState& s, double alpha, double tau);

// z+ = P(z - alpha F(z) + gamma (z - z_prev))
ViState step_heavy_ball(const MonotoneProblem& problem, const ViState& s, double alpha,
                        double gamma);

// half = z + beta (z - z_prev); z+ = P(z - alpha F(half) + beta (z - z_prev))
ViState step_nesterov(const MonotoneProblem& problem, const ViState& s, double alpha, double beta,
                      HalfStep* half = nullptr);

// half = z + beta (z - z_prev) - eta F(z) (projected when restricted);
// z+ = P(z - alpha F(half) + gamma (z - z_prev) - tau (F(z) - F(z_prev)))
ViState step_extra_point(const MonotoneProblem& problem, const ViState& s, const ViParams& p,
                         bool restricted, HalfStep* half = nullptr);

// Dispatches on `method`, reading only the parameters that method uses.
ViState step(const MonotoneProblem& problem, const ViState& s, ViMethod method,
             const ViParams& p, bool restricted, HalfStep* half = nullptr);

struct OptState {
  Vector x_curr;
  Vector v_curr;
  std::size_t k = 0;

  // v^0 = x^0.
  static OptState initial(const Vector& x0);
};

// Intermediate points of one optimization step.
struct OptStepDetail {
  Vector p;
  Vector y;
  Vector z;
  Vector grad_y;
  Vector grad_z;
};

OptState step_opt_extra_point(const SmoothObjective& objective, const OptState& s,
                              const OptParams& p, YRule y_rule, OptStepDetail* detail = nullptr);

// The same step written out for the default parameters with y = p:
//   y = (x + theta v)/(1 + theta), z = y - (delta/L) g(y),
//   x+ = y - ((1-delta)/((1+delta)^2 L)) g(z) - (1/((1+delta)^2 L))(g(z) - g(y))
//        + (3/(1+delta)^2)(z - y),
//   v+ = (1-theta) v + (theta (mu delta - L)/(mu delta)) y + (theta L/(mu delta)) z
// with theta = sqrt(mu/L).
OptState step_opt_simplified(const SmoothObjective& objective, const OptState& s, double delta);

}  // namespace viaccel
