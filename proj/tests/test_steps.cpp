#include <gtest/gtest.h>

#include <cmath>

#include "support.hpp"
#include "viaccel/certificate.hpp"
#include "viaccel/generators.hpp"
#include "viaccel/rng.hpp"
#include "viaccel/steps.hpp"

namespace viaccel {
namespace {

using testing::rel_diff;
using testing::scaled_identity;
using testing::vec;

ViState state(const MonotoneProblem& p, const Vector& curr, const Vector& prev) {
  return ViState{curr, prev, p.evaluate(curr), p.evaluate(prev), 1};
}

const MonotoneProblem& identity_1d() {
  static const MonotoneProblem p = scaled_identity(1, 1.0, 0.0, FeasibleSet::whole_space(), vec({0.0}));
  return p;
}

TEST(StepVanilla, Examples) {
  const auto& p = identity_1d();
  EXPECT_DOUBLE_EQ(step_vanilla(p, ViState::initial(p, vec({1.0})), 0.5).z_curr[0], 0.5);
  EXPECT_EQ(step_vanilla(p, ViState::initial(p, vec({0.0})), 0.5).z_curr, vec({0.0}));
  const auto shifted = scaled_identity(1, 1.0, -2.0, FeasibleSet::nonnegative_orthant());
  EXPECT_DOUBLE_EQ(step_vanilla(shifted, ViState::initial(shifted, vec({0.0})), 1.0).z_curr[0], 2.0);
}

TEST(StepExtragradient, Examples) {
  const auto& p = identity_1d();
  HalfStep half{vec({0.0}), vec({0.0})};
  const ViState next = step_extragradient(p, ViState::initial(p, vec({1.0})), 0.25, 0.25, false, &half);
  EXPECT_DOUBLE_EQ(half.z_half[0], 0.75);
  EXPECT_DOUBLE_EQ(next.z_curr[0], 13.0 / 16.0);
  EXPECT_EQ(step_extragradient(p, ViState::initial(p, vec({0.0})), 0.25, 0.25, false).z_curr, vec({0.0}));
}

TEST(StepExtragradient, RestrictedProjectsTheHalfPoint) {
  const auto p = scaled_identity(1, 1.0, 2.0, FeasibleSet::nonnegative_orthant());
  HalfStep half{vec({0.0}), vec({0.0})};
  step_extragradient(p, ViState::initial(p, vec({1.0})), 0.5, 1.0, true, &half);
  EXPECT_EQ(half.z_half, vec({0.0}));
  step_extragradient(p, ViState::initial(p, vec({1.0})), 0.5, 1.0, false, &half);
  EXPECT_EQ(half.z_half, vec({-2.0}));
}

TEST(StepOgda, Examples) {
  const auto& p = identity_1d();
  EXPECT_DOUBLE_EQ(step_ogda(p, state(p, vec({1.0}), vec({2.0})), 0.5, 0.25).z_curr[0], 0.75);
  EXPECT_EQ(step_ogda(p, state(p, vec({0.0}), vec({0.0})), 0.5, 0.25).z_curr, vec({0.0}));
}

TEST(StepHeavyBall, Example) {
  const auto& p = identity_1d();
  EXPECT_DOUBLE_EQ(step_heavy_ball(p, state(p, vec({1.0}), vec({0.0})), 0.5, 0.1).z_curr[0], 0.6);
}

TEST(StepNesterov, Example) {
  const auto& p = identity_1d();
  HalfStep half{vec({0.0}), vec({0.0})};
  const ViState next = step_nesterov(p, state(p, vec({1.0}), vec({0.0})), 0.5, 0.2, &half);
  EXPECT_DOUBLE_EQ(half.z_half[0], 1.2);
  EXPECT_DOUBLE_EQ(next.z_curr[0], 0.6);
}

TEST(StepExtraPoint, Examples) {
  const auto& p = identity_1d();
  HalfStep half{vec({0.0}), vec({0.0})};
  const ViParams params{0.25, 0.1, 0.1, 0.25, 0.05};
  const ViState next = step_extra_point(p, state(p, vec({1.0}), vec({0.0})), params, false, &half);
  EXPECT_DOUBLE_EQ(half.z_half[0], 0.85);
  EXPECT_DOUBLE_EQ(next.z_curr[0], 0.8375);
  EXPECT_EQ(step_extra_point(p, state(p, vec({0.0}), vec({0.0})), params, false).z_curr, vec({0.0}));
}

TEST(StepExtraPoint, StateAdvancesAndCachesAreFresh) {
  const LinearVi g = gen_linear_vi(6, 2, 0.05, true);
  const ViParams params = default_vi_params(Regime::ViRestricted, g.problem.mu(), g.problem.lip());
  ViState s = ViState::initial(g.problem, Vector(6, 1.0));
  for (int i = 0; i < 20; ++i) {
    const ViState next = step_extra_point(g.problem, s, params, true);
    EXPECT_EQ(next.k, s.k + 1);
    EXPECT_EQ(next.z_prev, s.z_curr);
    EXPECT_EQ(next.f_prev, s.f_curr);
    EXPECT_EQ(next.f_curr, g.problem.evaluate(next.z_curr));
    EXPECT_TRUE(g.problem.set().contains(next.z_curr));
    s = next;
  }
}

// The five classical rules against the extra-point step with the matching
// parameter pattern.
TEST(StepExtraPoint, SpecializesToClassicalMethods) {
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    for (bool constrained : {false, true}) {
      const LinearVi g = gen_linear_vi(8, seed, 0.05, constrained);
      const auto& p = g.problem;
      const double a = 0.5 / p.lip();
      Rng rng(seed);
      const Vector z0 = rng.uniform_vector(8, 0.0, 1.0);
      ViState gen = ViState::initial(p, z0);
      ViState ded = gen;
      struct Case {
        ViMethod m;
        ViParams params;
      };
      const Case cases[] = {
          {ViMethod::Vanilla, {a, 0, 0, 0, 0}},     {ViMethod::HeavyBall, {a, 0, 0.3, 0, 0}},
          {ViMethod::Extragradient, {a, 0, 0, a, 0}}, {ViMethod::Nesterov, {a, 0.3, 0.3, 0, 0}},
          {ViMethod::Ogda, {a, 0, 0, 0, 0.4 * a}},
      };
      for (const auto& c : cases) {
        // Nesterov's extrapolated point is never projected.
        const bool restricted = constrained && c.m != ViMethod::Nesterov;
        gen = ded = ViState::initial(p, z0);
        for (int k = 0; k < 30; ++k) {
          gen = step_extra_point(p, gen, c.params, restricted);
          ded = step(p, ded, c.m, c.params, restricted);
          ASSERT_LE(rel_diff(gen.z_curr, ded.z_curr), 1e-12) << to_string(c.m) << " k=" << k;
        }
      }
    }
  }
}

OptStepDetail blank_detail(std::size_t n) {
  return OptStepDetail{Vector(n), Vector(n), Vector(n), Vector(n), Vector(n)};
}

SmoothObjective half_square() {
  SmoothObjective::Options o;
  o.minimizer = vec({0.0});
  o.optimal_value = 0.0;
  return SmoothObjective(
      1, [](const Vector& x) { return 0.5 * x[0] * x[0]; }, [](const Vector& x, Vector& g) { g = x; }, 1.0,
      1.0, o);
}

TEST(StepOpt, FixedPointAtMinimizer) {
  const Quadratic q = gen_quadratic(5, 1, 0.1);
  const Vector& xs = *q.objective.minimizer();
  const OptParams params = default_opt_params(q.objective.mu(), q.objective.lip());
  OptStepDetail d = blank_detail(5);
  const OptState next = step_opt_extra_point(q.objective, OptState{xs, xs, 0}, params, YRule::YEqualsP, &d);
  EXPECT_LE(distance(next.x_curr, xs), 1e-12);
  EXPECT_LE(distance(next.v_curr, xs), 1e-12);
  EXPECT_LE(d.grad_y.norm(), 1e-12);
  EXPECT_LE(distance(d.z, xs), 1e-12);
}

TEST(StepOpt, UnitConditionSingleStep) {
  // sigma = 1 with the gradient-step y rule lands on the minimizer in one step.
  const auto f = half_square();
  const OptParams params = default_opt_params(1.0, 1.0, 0.5);
  OptStepDetail d = blank_detail(1);
  const OptState next = step_opt_extra_point(f, OptState::initial(vec({1.0})), params, YRule::YGradStep, &d);
  EXPECT_NEAR(next.x_curr[0], 0.0, 1e-12);
  EXPECT_NEAR(next.v_curr[0], 0.0, 1e-12);

  // With y = p the same step is hand-evaluated: p = y = 1, z = 0.5,
  // x+ = 1 - (0.5/2.25)(0.5) + (1/2.25)(0.5) - (3/2.25)(0.5) = 4/9.
  const OptState plain = step_opt_extra_point(f, OptState::initial(vec({1.0})), params, YRule::YEqualsP);
  EXPECT_NEAR(plain.x_curr[0], 4.0 / 9.0, 1e-15);
}

TEST(StepOpt, GenericMatchesSimplified) {
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    const Quadratic q = gen_quadratic(20, seed, 0.0024);
    const OptParams params = default_opt_params(q.objective.mu(), q.objective.lip(), 0.5);
    OptState a = OptState::initial(Vector(20, 1.0));
    OptState b = a;
    for (int k = 0; k < 100; ++k) {
      a = step_opt_extra_point(q.objective, a, params, YRule::YEqualsP);
      b = step_opt_simplified(q.objective, b, 0.5);
      ASSERT_LE(rel_diff(a.x_curr, b.x_curr), 1e-12) << k;
      ASSERT_LE(rel_diff(a.v_curr, b.v_curr), 1e-12) << k;
    }
  }
}

TEST(StepOpt, SimplifiedRejectsBadDelta) {
  EXPECT_THROW(step_opt_simplified(half_square(), OptState::initial(vec({1.0})), 1.0), std::invalid_argument);
}

TEST(Params, ValidateRejectsNegativeAndNonFinite) {
  EXPECT_THROW((ViParams{-1.0, 0, 0, 0, 0}.validate()), std::invalid_argument);
  EXPECT_THROW((ViParams{0, 0, 0, 0, std::nan("")}.validate()), std::invalid_argument);
  OptParams o;
  o.t[4] = -0.1;
  EXPECT_THROW(o.validate(), std::invalid_argument);
  EXPECT_EQ(parse_vi_method("extra-point"), ViMethod::ExtraPoint);
  EXPECT_THROW(parse_vi_method("adam"), std::invalid_argument);
  EXPECT_EQ(parse_y_rule("y-grad-step"), YRule::YGradStep);
}

}  // namespace
}  // namespace viaccel
