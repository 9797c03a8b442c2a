#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <stdexcept>
#include <string>

#include "eigen_bridge.hpp"
#include "viaccel/generators.hpp"
#include "viaccel/oracles.hpp"
#include "viaccel/rng.hpp"

namespace viaccel {
namespace {

constexpr int kGramSchmidtRetries = 8;

// Rows of the result are orthonormal; nullopt on numerical breakdown.
std::optional<Matrix> orthonormal_basis(std::size_t n, Rng& rng) {
  Matrix basis(n, n);
  Vector v(n);
  for (std::size_t i = 0; i < n; ++i) {
    v = rng.normal_vector(n);
    const double original = v.norm();
    for (std::size_t j = 0; j < i; ++j) {
      const double* u = basis.data() + j * n;
      double proj = 0.0;
      for (std::size_t c = 0; c < n; ++c) proj += v[c] * u[c];
      for (std::size_t c = 0; c < n; ++c) v[c] -= proj * u[c];
    }
    const double norm = v.norm();
    if (!(norm > 1e-8 * original)) return std::nullopt;
    for (std::size_t c = 0; c < n; ++c) basis(i, c) = v[c] / norm;
  }
  return basis;
}

}  // namespace

SmoothObjective make_quadratic_objective(const Matrix& m, const Vector& q, double mu, double lip,
                                         std::string label) {
  const std::size_t n = q.size();
  if (m.rows() != n || m.cols() != n) throw std::invalid_argument("quadratic: dimension mismatch");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (m(i, j) != m(j, i)) throw std::invalid_argument("quadratic: M is not symmetric");
    }
  }
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(Eigen::MatrixXd(detail::as_eigen(m)));
  const Eigen::VectorXd xs = lu.solve(-detail::as_eigen(q));
  if (!xs.allFinite()) throw std::runtime_error("quadratic: singular Hessian");
  Vector minimizer = detail::from_eigen(xs);
  const double f_star = 0.5 * q.dot(minimizer);

  struct Data {
    Matrix m;
    Vector q;
    Vector x_star;
  };
  auto data = std::make_shared<const Data>(Data{m, q, minimizer});
  SmoothObjective::Value value = [data](const Vector& x) {
    Vector mx = data->m.multiply(x);
    return 0.5 * x.dot(mx) + data->q.dot(x);
  };
  SmoothObjective::Gradient gradient = [data](const Vector& x, Vector& out) {
    data->m.multiply(x, out, &data->q);
  };
  SmoothObjective::Gap gap = [data](const Vector& x) {
    Vector d = x - data->x_star;
    return 0.5 * d.dot(data->m.multiply(d));
  };
  return SmoothObjective(n, std::move(value), std::move(gradient), mu, lip,
                         SmoothObjective::Options{std::move(minimizer), f_star, std::move(gap),
                                                  std::move(label)});
}

Quadratic gen_quadratic(std::size_t n, std::uint64_t seed, double target_sigma, double lip) {
  if (n < 2) throw std::invalid_argument("gen_quadratic: n must be at least 2");
  if (!(target_sigma > 0.0 && target_sigma < 1.0)) {
    throw std::invalid_argument("gen_quadratic: target sigma must lie in (0, 1)");
  }
  if (!(lip > 0.0) || !std::isfinite(lip)) {
    throw std::invalid_argument("gen_quadratic: lip must be positive");
  }

  std::optional<Matrix> basis;
  std::uint64_t attempt_seed = seed;
  Rng rng(attempt_seed);
  for (int attempt = 0; attempt <= kGramSchmidtRetries && !basis; ++attempt) {
    if (attempt > 0) {
      attempt_seed = seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(attempt);
      rng = Rng(attempt_seed);
    }
    basis = orthonormal_basis(n, rng);
  }
  if (!basis) throw std::runtime_error("gen_quadratic: Gram-Schmidt broke down on every retry");

  const double mu = target_sigma * lip;
  std::vector<double> e(n);
  for (double& x : e) x = rng.uniform();
  const auto [emin_it, emax_it] = std::minmax_element(e.begin(), e.end());
  const auto imin = static_cast<std::size_t>(emin_it - e.begin());
  const auto imax = static_cast<std::size_t>(emax_it - e.begin());
  if (imin == imax) throw std::runtime_error("gen_quadratic: degenerate spectrum draw");
  Vector eigenvalues(n);
  const double log_mu = std::log(mu);
  const double log_l = std::log(lip);
  for (std::size_t i = 0; i < n; ++i) {
    const double t = (e[i] - *emin_it) / (*emax_it - *emin_it);
    eigenvalues[i] = std::exp(log_mu + t * (log_l - log_mu));
  }
  eigenvalues[imin] = mu;
  eigenvalues[imax] = lip;

  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < n; ++k) s += eigenvalues[k] * (*basis)(k, i) * (*basis)(k, j);
      m(i, j) = s;
      m(j, i) = s;
    }
  }
  Vector q = rng.uniform_vector(n, -1.0, 1.0);

  SmoothObjective objective = make_quadratic_objective(m, q, mu, lip, "quadratic");
  return Quadratic{std::move(objective), QuadraticSpec{std::move(m), std::move(q),
                                                       std::move(eigenvalues), std::move(*basis)}};
}

namespace {

// ln(1 + exp(t)) without overflow.
double softplus(double t) { return t > 0.0 ? t + std::log1p(std::exp(-t)) : std::log1p(std::exp(t)); }

// 1 / (1 + exp(-t)) without overflow.
double sigmoid(double t) {
  if (t >= 0.0) return 1.0 / (1.0 + std::exp(-t));
  const double e = std::exp(t);
  return e / (1.0 + e);
}

}  // namespace

SmoothObjective make_logistic_objective(const LogisticSpec& spec, std::optional<double> lip,
                                        std::string label) {
  if (spec.samples.empty()) throw std::invalid_argument("logistic: at least one sample required");
  if (!(spec.lambda > 0.0)) throw std::invalid_argument("logistic: lambda must be positive");
  const std::size_t n = spec.samples.front().size();
  for (const auto& a : spec.samples) {
    if (a.size() != n) throw std::invalid_argument("logistic: samples differ in dimension");
  }
  auto data = std::make_shared<const LogisticSpec>(spec);
  const double inv_n = 1.0 / static_cast<double>(spec.samples.size());

  double l = 0.0;
  if (lip) {
    l = *lip;
  } else {
    auto gram = [data](const Vector& x, Vector& out) {
      std::fill(out.begin(), out.end(), 0.0);
      for (const auto& a : data->samples) out.axpy(a.dot(x), a);
    };
    const double top = power_iteration_norm(gram, {}, n, 1000, 0x10915);
    l = spec.lambda + top * inv_n / 4.0;
  }

  SmoothObjective::Value value = [data, inv_n](const Vector& x) {
    double s = 0.0;
    for (const auto& a : data->samples) s += softplus(-a.dot(x));
    return s * inv_n + 0.5 * data->lambda * x.squared_norm();
  };
  SmoothObjective::Gradient gradient = [data, inv_n](const Vector& x, Vector& out) {
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = data->lambda * x[i];
    for (const auto& a : data->samples) out.axpy(-sigmoid(-a.dot(x)) * inv_n, a);
  };
  return SmoothObjective(n, std::move(value), std::move(gradient), spec.lambda, l,
                         SmoothObjective::Options{std::nullopt, std::nullopt, {}, std::move(label)});
}

Logistic gen_logistic(std::size_t n, std::size_t n_samples, double lambda, std::uint64_t seed,
                      double feature_scale) {
  if (n == 0 || n_samples == 0) {
    throw std::invalid_argument("gen_logistic: n and n_samples must be positive");
  }
  if (!(lambda > 0.0)) throw std::invalid_argument("gen_logistic: lambda must be positive");
  if (!(feature_scale > 0.0)) throw std::invalid_argument("gen_logistic: feature scale must be positive");
  Rng rng(seed);
  LogisticSpec spec{{}, lambda};
  spec.samples.reserve(n_samples);
  for (std::size_t i = 0; i < n_samples; ++i) spec.samples.push_back(rng.normal_vector(n, feature_scale));
  SmoothObjective objective = make_logistic_objective(spec, std::nullopt, "logistic");
  return Logistic{std::move(objective), std::move(spec)};
}

ConstantEstimate estimate_constants(const MonotoneProblem& problem, std::size_t trials,
                                    const EstimateOptions& options) {
  if (trials < 2) throw std::invalid_argument("estimate_constants: need at least 2 sample points");
  const std::size_t n = problem.dimension();
  const FeasibleSet& set = problem.set();
  Rng rng(options.seed);
  const double scale = 1.0 + (problem.solution() ? problem.solution()->norm() : 0.0);

  double mu_hat = std::numeric_limits<double>::infinity();
  double lip_hat = 0.0;
  std::size_t pairs = 0;
  auto record = [&](const Vector& dz, const Vector& df) {
    const double dd = dz.squared_norm();
    if (dd == 0.0) return;
    mu_hat = std::min(mu_hat, df.dot(dz) / dd);
    lip_hat = std::max(lip_hat, df.norm() / std::sqrt(dd));
    ++pairs;
  };

  Vector prev = set.project(rng.normal_vector(n, scale));
  Vector f_prev = problem.evaluate(prev);
  for (std::size_t t = 1; t < trials; ++t) {
    Vector cur = set.project(rng.normal_vector(n, scale));
    Vector f_cur = problem.evaluate(cur);
    record(cur - prev, f_cur - f_prev);
    prev = std::move(cur);
    f_prev = std::move(f_cur);
  }

  if (!problem.domain_restricted()) {
    const Vector base = set.project(Vector(n));
    double base_inf = 0.0;
    for (double x : base) base_inf = std::max(base_inf, std::abs(x));
    const double h = options.fd_step * (1.0 + base_inf);
    Matrix jac = finite_diff_jacobian(problem, base, h);
    Vector dz(n);
    Vector df(n);
    for (std::size_t c = 0; c < n; ++c) {
      std::fill(dz.begin(), dz.end(), 0.0);
      dz[c] = 2.0 * h;
      for (std::size_t r = 0; r < n; ++r) df[r] = jac(r, c) * 2.0 * h;
      record(dz, df);
    }
    lip_hat = std::max(lip_hat, power_iteration_norm(jac, options.power_iters, options.seed));
  }

  if (pairs == 0) throw std::invalid_argument("estimate_constants: fewer than 2 distinct sample points");
  return ConstantEstimate{mu_hat, lip_hat};
}

}  // namespace viaccel
