#include "viaccel/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "viaccel/rng.hpp"

namespace viaccel {

double power_iteration_norm(const LinearMap& apply, const LinearMap& apply_transposed,
                            std::size_t n, std::size_t iters, std::uint64_t seed) {
  if (iters == 0) throw std::invalid_argument("power iteration needs at least one iteration");
  if (n == 0) throw std::invalid_argument("power iteration needs a positive dimension");
  const LinearMap& apply_t = apply_transposed ? apply_transposed : apply;

  Rng rng(seed);
  Vector v = rng.normal_vector(n);
  double nv = v.norm();
  if (nv == 0.0) {
    v[0] = 1.0;
    nv = 1.0;
  }
  v *= 1.0 / nv;

  Vector mv(n);
  Vector mtmv(n);
  double best = 0.0;
  for (std::size_t k = 0; k < iters; ++k) {
    apply(v, mv);
    const double norm_mv = mv.norm();
    best = std::max(best, norm_mv);
    if (norm_mv == 0.0) break;
    apply_t(mv, mtmv);
    const double norm_mtmv = mtmv.norm();
    if (norm_mtmv == 0.0) break;
    for (std::size_t i = 0; i < n; ++i) v[i] = mtmv[i] / norm_mtmv;
  }
  return best;
}

double power_iteration_norm(const Matrix& m, std::size_t iters, std::uint64_t seed) {
  if (m.rows() != m.cols()) throw std::invalid_argument("power iteration expects a square matrix");
  return power_iteration_norm([&m](const Vector& x, Vector& out) { m.multiply(x, out); },
                              [&m](const Vector& x, Vector& out) { m.multiply_transposed(x, out); },
                              m.rows(), iters, seed);
}

Vector finite_diff_grad(const SmoothObjective& objective, const Vector& x, double step) {
  if (!(step > 0.0)) throw std::invalid_argument("finite-difference step must be positive");
  Vector g(x.size());
  Vector probe = x;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double xi = x[i];
    probe[i] = xi + step;
    const double fp = objective.value(probe);
    probe[i] = xi - step;
    const double fm = objective.value(probe);
    probe[i] = xi;
    g[i] = (fp - fm) / (2.0 * step);
  }
  return g;
}

Matrix finite_diff_jacobian(const MonotoneProblem& problem, const Vector& z, double step) {
  if (!(step > 0.0)) throw std::invalid_argument("finite-difference step must be positive");
  const std::size_t n = problem.dimension();
  Matrix j(n, n);
  Vector probe = z;
  Vector fp(n);
  Vector fm(n);
  for (std::size_t c = 0; c < n; ++c) {
    const double zc = z[c];
    probe[c] = zc + step;
    problem.evaluate(probe, fp);
    probe[c] = zc - step;
    problem.evaluate(probe, fm);
    probe[c] = zc;
    for (std::size_t r = 0; r < n; ++r) j(r, c) = (fp[r] - fm[r]) / (2.0 * step);
  }
  return j;
}

}  // namespace viaccel
