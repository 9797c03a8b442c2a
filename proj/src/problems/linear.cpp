#include <algorithm>
#include <cmath>
#include <memory>
#include <stdexcept>
#include <string>

#include "eigen_bridge.hpp"
#include "viaccel/generators.hpp"
#include "viaccel/rng.hpp"

namespace viaccel {

void validate(const LinearOperatorSpec& spec) {
  const std::size_t n = spec.q.size();
  if (spec.m.rows() != n || spec.m.cols() != n || spec.a_skew.rows() != n ||
      spec.a_skew.cols() != n || spec.q_diag.size() != n) {
    throw std::invalid_argument("linear operator spec: inconsistent dimensions");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!(spec.q_diag[i] > 0.0)) {
      throw std::invalid_argument("linear operator spec: Q diagonal must be positive");
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (spec.a_skew(i, j) != -spec.a_skew(j, i)) {
        throw std::invalid_argument("linear operator spec: A is not skew-symmetric");
      }
      const double expected = spec.a_skew(i, j) + (i == j ? spec.q_diag[i] : 0.0);
      if (spec.m(i, j) != expected) {
        throw std::invalid_argument("linear operator spec: M differs from diag(Q) + A");
      }
    }
  }
}

MonotoneProblem make_linear_problem(const LinearOperatorSpec& spec, FeasibleSet set, double mu,
                                    double lip, std::optional<Vector> solution,
                                    bool domain_restricted, std::string label) {
  auto shared = std::make_shared<const LinearOperatorSpec>(spec);
  Operator op = [shared](const Vector& z, Vector& out) { shared->m.multiply(z, out, &shared->q); };
  return MonotoneProblem(spec.q.size(), std::move(op), std::move(set), mu, lip,
                         MonotoneProblem::Options{std::move(solution), domain_restricted,
                                                  std::move(label)});
}

double spectral_norm(const Matrix& m) {
  const auto a = detail::as_eigen(m);
  const Eigen::MatrixXd ata = a.transpose() * a;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(ata, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw std::runtime_error("spectral norm: eigensolver failed");
  return std::sqrt(std::max(0.0, es.eigenvalues().maxCoeff()));
}

namespace {

Matrix assemble(const Vector& q_diag, const Matrix& a_skew, double s) {
  Matrix m = a_skew;
  for (std::size_t i = 0; i < q_diag.size(); ++i) m(i, i) = s * q_diag[i];
  return m;
}

}  // namespace

LinearVi gen_linear_vi(std::size_t n, std::uint64_t seed, double target_sigma, bool constrained) {
  if (n < 2) throw std::invalid_argument("gen_linear_vi: n must be at least 2");
  if (!(target_sigma > 0.0 && target_sigma < 1.0)) {
    throw std::invalid_argument("gen_linear_vi: target sigma must lie in (0, 1)");
  }
  Rng rng(seed);

  // Log-uniform exponents rescaled to exactly [0, log10 R].
  const double span = target_sigma <= 0.01 ? 2.0 : std::log10(1.0 / target_sigma);
  std::vector<double> e(n);
  for (double& x : e) x = rng.uniform();
  const auto [emin_it, emax_it] = std::minmax_element(e.begin(), e.end());
  const double emin = *emin_it;
  const double emax = *emax_it;
  if (!(emax > emin)) throw std::runtime_error("gen_linear_vi: degenerate diagonal draw");
  Vector d(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double t = (e[i] - emin) / (emax - emin);
    d[i] = (e[i] == emin) ? 1.0 : std::pow(10.0, t * span);
  }

  Matrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      a(i, j) = rng.uniform(-1.0, 1.0);
      a(j, i) = -a(i, j);
    }
  }
  Vector q = rng.uniform_vector(n, -1.0, 1.0);

  // sigma(s) = s / ||s D + A|| increases toward 1/R; aim just under the target.
  const double r = std::pow(10.0, span);
  const double aim = std::min(target_sigma, 0.98 / r);
  auto sigma_of = [&](double s) { return s / spectral_norm(assemble(d, a, s)); };
  double lo = 0.0;
  double hi = 1.0;
  for (int guard = 0; sigma_of(hi) < aim; ++guard) {
    if (guard > 200) throw std::runtime_error("gen_linear_vi: cannot bracket the target sigma");
    lo = hi;
    hi *= 2.0;
  }
  for (int it = 0; it < 200 && hi - lo > 1e-14 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    (sigma_of(mid) < aim ? lo : hi) = mid;
  }
  const double s = lo > 0.0 ? lo : hi;

  Vector q_diag(n);
  for (std::size_t i = 0; i < n; ++i) q_diag[i] = s * d[i];
  LinearOperatorSpec spec{assemble(d, a, s), q, q_diag, a};
  validate(spec);

  const double mu = *std::min_element(q_diag.begin(), q_diag.end());
  const double lip = spectral_norm(spec.m);
  FeasibleSet set = constrained ? FeasibleSet::nonnegative_orthant() : FeasibleSet::whole_space();
  Vector solution = solve_linear_reference(spec, set);
  MonotoneProblem problem = make_linear_problem(spec, set, mu, lip, std::move(solution), false,
                                                constrained ? "linear-vi-lcp" : "linear-vi");
  return LinearVi{std::move(problem), std::move(spec)};
}

namespace {

Vector solve_dense(const Matrix& m, const Vector& rhs) {
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(Eigen::MatrixXd(detail::as_eigen(m)));
  const Eigen::VectorXd x = lu.solve(detail::as_eigen(rhs));
  if (!x.allFinite()) throw ReferenceFailure("linear reference: singular system");
  return detail::from_eigen(x);
}

double lcp_residual(const Matrix& m, const Vector& q, const Vector& z, Vector& w) {
  m.multiply(z, w, &q);
  double sq = 0.0;
  for (std::size_t i = 0; i < z.size(); ++i) {
    const double d = z[i] - std::max(0.0, z[i] - w[i]);
    sq += d * d;
  }
  return std::sqrt(sq);
}

// Solve M_SS z_S = -q_S on the support guessed from z; empty when the
// candidate is not complementary.
std::optional<Vector> polish(const Matrix& m, const Vector& q, const Vector& z) {
  const std::size_t n = z.size();
  Vector w(n);
  m.multiply(z, w, &q);
  std::vector<std::size_t> support;
  for (std::size_t i = 0; i < n; ++i) {
    if (z[i] > w[i]) support.push_back(i);
  }
  Vector out(n);
  if (!support.empty()) {
    const std::size_t k = support.size();
    Matrix sub(k, k);
    Vector rhs(k);
    for (std::size_t i = 0; i < k; ++i) {
      rhs[i] = -q[support[i]];
      for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(support[i], support[j]);
    }
    Vector zs = solve_dense(sub, rhs);
    for (std::size_t i = 0; i < k; ++i) {
      if (zs[i] < 0.0) return std::nullopt;
      out[support[i]] = zs[i];
    }
  }
  m.multiply(out, w, &q);
  for (std::size_t i = 0; i < n; ++i) {
    if (out[i] == 0.0 && w[i] < 0.0) return std::nullopt;
  }
  return out;
}

}  // namespace

Vector solve_linear_reference(const LinearOperatorSpec& spec, const FeasibleSet& set) {
  const Matrix& m = spec.m;
  const Vector& q = spec.q;
  const std::size_t n = q.size();
  if (set.kind() == SetKind::WholeSpace) {
    Vector rhs = q;
    rhs *= -1.0;
    return solve_dense(m, rhs);
  }
  if (set.kind() != SetKind::NonnegativeOrthant) {
    throw std::invalid_argument("linear reference supports only whole space and the orthant");
  }

  const double alpha = 1.0 / (4.0 * spectral_norm(m));
  constexpr std::size_t kMaxIter = 1'000'000;
  constexpr double kTol = 1e-12;

  Vector z(n);
  Vector w(n);
  Vector half(n);
  Vector fh(n);
  double res = lcp_residual(m, q, z, w);
  std::size_t k = 0;
  for (; k < kMaxIter && res > kTol * (1.0 + z.norm()); ++k) {
    linear_combination(1.0, z, -alpha, w, half);
    set.project_into(half, half);
    m.multiply(half, fh, &q);
    linear_combination(1.0, z, -alpha, fh, z);
    set.project_into(z, z);
    res = lcp_residual(m, q, z, w);
  }
  if (!z.all_finite() || res > kTol * (1.0 + z.norm())) {
    throw ReferenceFailure("LCP reference: extra-gradient did not reach residual 1e-12 within " +
                           std::to_string(kMaxIter) + " iterations (residual " +
                           std::to_string(res) + ")");
  }

  if (auto p = polish(m, q, z)) {
    Vector wp(n);
    if (lcp_residual(m, q, *p, wp) < res) z = std::move(*p);
  }

  // Complementarity check by direct substitution.
  m.multiply(z, w, &q);
  const double scale = 1.0 + z.norm();
  double comp = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (z[i] < 0.0 || w[i] < -1e-9 * scale) {
      throw ReferenceFailure("LCP reference: sign conditions violated at index " +
                             std::to_string(i));
    }
    comp += z[i] * w[i];
  }
  if (std::abs(comp) > 1e-9 * scale) throw ReferenceFailure("LCP reference: complementarity fails");
  return z;
}

LinearOperatorSpec bilinear_operator(const Matrix& b, double mu_x, double mu_y) {
  const std::size_t nx = b.rows();
  const std::size_t ny = b.cols();
  const std::size_t n = nx + ny;
  Matrix a(n, n);
  for (std::size_t i = 0; i < nx; ++i) {
    for (std::size_t j = 0; j < ny; ++j) {
      a(i, nx + j) = b(i, j);
      a(nx + j, i) = -b(i, j);
    }
  }
  Vector q_diag(n);
  for (std::size_t i = 0; i < n; ++i) q_diag[i] = i < nx ? mu_x : mu_y;
  return LinearOperatorSpec{assemble(q_diag, a, 1.0), Vector(n), q_diag, a};
}

BilinearSaddle gen_bilinear_saddle(std::size_t nx, std::size_t ny, std::uint64_t seed, double mu_x,
                                   double mu_y, double coupling) {
  if (nx == 0 || ny == 0) throw std::invalid_argument("gen_bilinear_saddle: empty block");
  if (!(mu_x > 0.0) || !(mu_y > 0.0)) {
    throw std::invalid_argument("gen_bilinear_saddle: mu_x and mu_y must be positive");
  }
  if (!(coupling >= 0.0)) throw std::invalid_argument("gen_bilinear_saddle: negative coupling");
  Rng rng(seed);
  Matrix b(nx, ny);
  for (std::size_t i = 0; i < nx; ++i) {
    for (std::size_t j = 0; j < ny; ++j) b(i, j) = coupling * rng.uniform(-1.0, 1.0);
  }
  LinearOperatorSpec spec = bilinear_operator(b, mu_x, mu_y);
  const double mu = std::min(mu_x, mu_y);
  const double lip = std::max(mu, spectral_norm(spec.m));
  MonotoneProblem problem = make_linear_problem(spec, FeasibleSet::whole_space(), mu, lip,
                                                Vector(nx + ny), false, "bilinear-saddle");
  return BilinearSaddle{std::move(problem), std::move(b), mu_x, mu_y, std::move(spec)};
}

}  // namespace viaccel
