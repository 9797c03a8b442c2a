#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "viaccel/feasible_set.hpp"
#include "viaccel/problem.hpp"
#include "viaccel/vector.hpp"

namespace viaccel {

// F(z) = M z + q with M = diag(q_diag) + a_skew.
struct LinearOperatorSpec {
  Matrix m;
  Vector q;
  Vector q_diag;
  Matrix a_skew;
};

// Throws std::invalid_argument unless a_skew is exactly skew, q_diag > 0 and
// m == diag(q_diag) + a_skew bitwise.
void validate(const LinearOperatorSpec& spec);

// The VI for a linear spec over `set`; F(z) = M z + q through the active kernels.
MonotoneProblem make_linear_problem(const LinearOperatorSpec& spec, FeasibleSet set, double mu,
                                    double lip, std::optional<Vector> solution,
                                    bool domain_restricted = false, std::string label = {});

// ||M||_2 from a dense symmetric eigensolve of M^T M.
double spectral_norm(const Matrix& m);

struct LinearVi {
  MonotoneProblem problem;
  LinearOperatorSpec spec;
};

// Q = s D with D log-uniform over at least two decades (exactly the span
// [1, R], R = max(100, 1/target_sigma)) and s chosen by bisection so that
// min(Q) / ||Q + A||_2 lands just below target_sigma. A skew with entries
// uniform in [-1, 1], q uniform in [-1, 1]^n. mu = min Q, lip = ||M||_2.
// The solution comes from solve_linear_reference.
LinearVi gen_linear_vi(std::size_t n, std::uint64_t seed, double target_sigma, bool constrained);

// Raised when the reference solver cannot certify a solution.
class ReferenceFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// WholeSpace: M z = -q by LU with partial pivoting.
// NonnegativeOrthant: LCP via restricted extra-gradient (alpha = 1/(4L)) to a
// natural residual of 1e-12 (1 + ||z||), then an active-set polish that is kept
// only if it satisfies complementarity with a smaller residual.
Vector solve_linear_reference(const LinearOperatorSpec& spec, const FeasibleSet& set);

struct QuadraticSpec {
  Matrix m;
  Vector q;
  Vector eigenvalues;
  Matrix basis;  // row i is the unit eigenvector u_i
};

struct Quadratic {
  SmoothObjective objective;
  QuadraticSpec spec;
};

// Largest eigenvalue of generated quadratics unless overridden.
inline constexpr double kDefaultQuadraticLip = 40.0;

// M = sum_i lambda_i u_i u_i^T with orthonormal u_i (modified Gram-Schmidt on
// seeded Gaussians) and lambda log-uniform with min exactly target_sigma * lip
// and max exactly lip; q uniform in [-1, 1]^n.
Quadratic gen_quadratic(std::size_t n, std::uint64_t seed, double target_sigma,
                        double lip = kDefaultQuadraticLip);

// f = x^T M x / 2 + q^T x with the minimizer from an LU solve and the exact gap
// (x - x*)^T M (x - x*) / 2. M must be symmetric.
SmoothObjective make_quadratic_objective(const Matrix& m, const Vector& q, double mu, double lip,
                                         std::string label = {});

struct LogisticSpec {
  std::vector<Vector> samples;
  double lambda;
};

struct Logistic {
  SmoothObjective objective;
  LogisticSpec spec;
};

// Standard deviation of generated logistic features.
inline constexpr double kDefaultFeatureScale = 0.1;

// f = (1/N) sum ln(1 + exp(-a_i^T x)) + (lambda/2) ||x||^2, a_i entries normal
// with standard deviation feature_scale. mu = lambda and
// lip = lambda + lambda_max(sum a_i a_i^T) / (4N) by power iteration.
Logistic gen_logistic(std::size_t n, std::size_t n_samples, double lambda, std::uint64_t seed,
                      double feature_scale = kDefaultFeatureScale);

// `lip` overrides the smoothness bound when given.
SmoothObjective make_logistic_objective(const LogisticSpec& spec,
                                        std::optional<double> lip = std::nullopt,
                                        std::string label = {});

struct BilinearSaddle {
  MonotoneProblem problem;
  Matrix b;
  double mu_x;
  double mu_y;
  LinearOperatorSpec spec;
};

// f(x, y) = (mu_x/2)||x||^2 + x^T B y - (mu_y/2)||y||^2 with B uniform in
// [-coupling, coupling]. F(z) = (grad_x f, -grad_y f), z* = 0,
// mu = min(mu_x, mu_y), lip = ||M||_2.
BilinearSaddle gen_bilinear_saddle(std::size_t nx, std::size_t ny, std::uint64_t seed, double mu_x,
                                   double mu_y, double coupling = 1.0);

LinearOperatorSpec bilinear_operator(const Matrix& b, double mu_x, double mu_y);

struct ConstantEstimate {
  double mu_hat;
  double lip_hat;
};

struct EstimateOptions {
  std::size_t power_iters = 1000;
  std::uint64_t seed = 0x5eed;
  // Relative step of the finite-difference Jacobian.
  double fd_step = 1e-4;
};

// Empirical (mu, L) from `trials` random points (consecutive pairs), the
// coordinate pairs around a base point, and power iteration on the
// finite-difference Jacobian. The Jacobian is skipped for domain-restricted
// problems. Throws std::invalid_argument when trials < 2.
ConstantEstimate estimate_constants(const MonotoneProblem& problem, std::size_t trials,
                                    const EstimateOptions& options = {});

}  // namespace viaccel
