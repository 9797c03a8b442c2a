#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>
#include <cmath>

#include "support.hpp"
#include "viaccel/generators.hpp"
#include "viaccel/rng.hpp"

namespace viaccel {
namespace {

using testing::to_eigen;

double eigen_spectral_norm(const Matrix& m) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(to_eigen(m));
  return svd.singularValues()(0);
}

TEST(GenLinearVi, SigmaInRequestedRegime) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const LinearVi g = gen_linear_vi(20, seed, 1e-2, false);
    EXPECT_GE(g.problem.sigma(), 0.5e-2);
    EXPECT_LE(g.problem.sigma(), 2e-2);
  }
}

TEST(GenLinearVi, ConstantsMatchEigenOracle) {
  const LinearVi g = gen_linear_vi(20, 7, 1e-2, false);
  double min_q = INFINITY;
  for (double q : g.spec.q_diag) min_q = std::min(min_q, q);
  EXPECT_DOUBLE_EQ(g.problem.mu(), min_q);
  EXPECT_NEAR(g.problem.lip(), eigen_spectral_norm(g.spec.m), 1e-10 * g.problem.lip());
}

TEST(GenLinearVi, SkewPartIsExactAndDropsFromQuadraticForm) {
  const LinearVi g = gen_linear_vi(12, 3, 1e-2, false);
  EXPECT_NO_THROW(validate(g.spec));
  Rng rng(5);
  for (int i = 0; i < 20; ++i) {
    const Vector z = rng.uniform_vector(12, -1.0, 1.0);
    Vector az(12);
    g.spec.a_skew.multiply(z, az);
    EXPECT_NEAR(z.dot(az), 0.0, 1e-13);
  }
}

TEST(GenLinearVi, Deterministic) {
  const LinearVi a = gen_linear_vi(20, 11, 1e-2, true);
  const LinearVi b = gen_linear_vi(20, 11, 1e-2, true);
  EXPECT_EQ(a.spec.m, b.spec.m);
  EXPECT_EQ(a.spec.q, b.spec.q);
  EXPECT_EQ(*a.problem.solution(), *b.problem.solution());
}

TEST(GenLinearVi, BadSigmaRejected) {
  EXPECT_THROW(gen_linear_vi(5, 1, 1.0, false), std::invalid_argument);
  EXPECT_THROW(gen_linear_vi(5, 1, 0.0, false), std::invalid_argument);
  EXPECT_THROW(gen_linear_vi(5, 1, 2.0, false), std::invalid_argument);
}

TEST(GenLinearVi, SolutionsSatisfyTheirInvariants) {
  const LinearVi u = gen_linear_vi(20, 2, 1e-2, false);
  const Vector& zu = *u.problem.solution();
  EXPECT_LE(u.problem.evaluate(zu).norm(), 1e-9 * (1.0 + zu.norm()));

  // Whole-space solution against an Eigen LU solve.
  const Eigen::VectorXd ref = to_eigen(u.spec.m).partialPivLu().solve(-to_eigen(u.spec.q));
  for (std::size_t i = 0; i < 20; ++i) EXPECT_NEAR(zu[i], ref(static_cast<Eigen::Index>(i)), 1e-10);

  const LinearVi c = gen_linear_vi(20, 2, 1e-2, true);
  const Vector& zc = *c.problem.solution();
  const Vector fz = c.problem.evaluate(zc);
  for (std::size_t i = 0; i < 20; ++i) {
    EXPECT_GE(zc[i], 0.0);
    EXPECT_GE(fz[i], -1e-9);
  }
  EXPECT_LE(std::abs(zc.dot(fz)), 1e-9);
}

TEST(SolveLinearReference, IdentitySystems) {
  const std::size_t n = 4;
  LinearOperatorSpec spec{Matrix::identity(n), Vector(n, -1.0), Vector(n, 1.0), Matrix(n, n)};
  EXPECT_EQ(solve_linear_reference(spec, FeasibleSet::whole_space()), Vector(n, 1.0));
  spec.q = Vector(n, 1.0);
  const Vector z = solve_linear_reference(spec, FeasibleSet::nonnegative_orthant());
  EXPECT_LE(z.norm(), 1e-12);
}

TEST(GenQuadratic, SigmaAndSpectrumExact) {
  const Quadratic q = gen_quadratic(20, 1, 0.0024);
  EXPECT_NEAR(q.objective.sigma(), 0.0024, 1e-6 * 0.0024);
  EXPECT_DOUBLE_EQ(q.objective.lip(), kDefaultQuadraticLip);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(to_eigen(q.spec.m));
  EXPECT_NEAR(es.eigenvalues()(0), q.objective.mu(), 1e-10);
  EXPECT_NEAR(es.eigenvalues()(19), q.objective.lip(), 1e-10);

  const Vector& xs = *q.objective.minimizer();
  EXPECT_LE(q.objective.gradient(xs).norm(), 1e-9);
}

TEST(GenQuadratic, BadSigmaRejected) {
  EXPECT_THROW(gen_quadratic(5, 1, 1.5), std::invalid_argument);
}

TEST(GenLogistic, ModulusAndValueAtOrigin) {
  const Logistic g = gen_logistic(15, 2, 0.005, 1);
  EXPECT_EQ(g.objective.mu(), 0.005);
  EXPECT_NEAR(g.objective.value(Vector(15)), std::log(2.0), 1e-15);
}

TEST(GenLogistic, SmoothnessBoundAgainstEigen) {
  const Logistic g = gen_logistic(10, 40, 1e-3, 4);
  Eigen::MatrixXd s = Eigen::MatrixXd::Zero(10, 10);
  for (const auto& a : g.spec.samples) s += to_eigen(a) * to_eigen(a).transpose();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(s);
  const double ref = 1e-3 + es.eigenvalues()(9) / (4.0 * 40.0);
  EXPECT_NEAR(g.objective.lip(), ref, 1e-6 * ref);
}

TEST(GenLogistic, SampledConvexityBounds) {
  const Logistic g = gen_logistic(8, 30, 1e-2, 9);
  const auto& f = g.objective;
  Rng rng(2);
  for (int i = 0; i < 100; ++i) {
    const Vector x = rng.uniform_vector(8, -3.0, 3.0);
    const Vector y = rng.uniform_vector(8, -3.0, 3.0);
    const double lin = f.value(x) + f.gradient(x).dot(y - x);
    const double d2 = squared_distance(x, y);
    const double scale = std::abs(f.value(y)) + std::abs(lin) + d2;
    EXPECT_GE(f.value(y) - (lin + 0.5 * f.mu() * d2), -1e-8 * scale);
    EXPECT_LE(f.value(y) - (lin + 0.5 * f.lip() * d2), 1e-8 * scale);
  }
}

TEST(GenBilinearSaddle, OriginIsTheSaddle) {
  const BilinearSaddle g = gen_bilinear_saddle(3, 4, 1, 0.2, 0.5);
  EXPECT_EQ(g.problem.dimension(), 7u);
  EXPECT_DOUBLE_EQ(g.problem.mu(), 0.2);
  EXPECT_EQ(*g.problem.solution(), Vector(7));
  EXPECT_EQ(g.problem.evaluate(Vector(7)), Vector(7));
  EXPECT_NEAR(g.problem.lip(), eigen_spectral_norm(g.spec.m), 1e-10 * g.problem.lip());
}

TEST(GenBilinearSaddle, ZeroCouplingDecouples) {
  const BilinearSaddle g = gen_bilinear_saddle(2, 3, 1, 0.2, 0.5, 0.0);
  EXPECT_NEAR(g.problem.lip(), 0.5, 1e-12);
  const Vector f = g.problem.evaluate(Vector{1.0, 2.0, 3.0, 4.0, 5.0});
  EXPECT_NEAR(f[0], 0.2, 1e-15);
  EXPECT_NEAR(f[1], 0.4, 1e-15);
  EXPECT_NEAR(f[2], 1.5, 1e-15);
  EXPECT_NEAR(f[4], 2.5, 1e-15);
}

}  // namespace
}  // namespace viaccel
