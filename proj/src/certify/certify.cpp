#include "viaccel/certificate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "viaccel/problem_io.hpp"

namespace viaccel {
namespace {

constexpr double kRelTol = 1e-12;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double max_abs(std::initializer_list<double> xs) {
  double m = 0.0;
  for (double x : xs) m = std::max(m, std::abs(x));
  return m;
}

class Checker {
 public:
  // Non-strict inequalities and equalities get a relative slack of kRelTol
  // times `scale` (default max(|lhs|, |rhs|)); strict ones are exact.
  void le(const std::string& id, double lhs, double rhs, double scale = -1.0) {
    add(id, lhs <= rhs + slack(lhs, rhs, scale), lhs, rhs, "<=");
  }
  void ge(const std::string& id, double lhs, double rhs, double scale = -1.0) {
    add(id, lhs >= rhs - slack(lhs, rhs, scale), lhs, rhs, ">=");
  }
  void lt(const std::string& id, double lhs, double rhs) { add(id, lhs < rhs, lhs, rhs, "<"); }
  void gt(const std::string& id, double lhs, double rhs) { add(id, lhs > rhs, lhs, rhs, ">"); }
  void eq(const std::string& id, double lhs, double rhs, double scale = -1.0) {
    add(id, std::abs(lhs - rhs) <= slack(lhs, rhs, scale), lhs, rhs, "=");
  }
  // Exact nonnegativity.
  void nonneg(const std::string& id, double x) { add(id, x >= 0.0, x, 0.0, ">="); }

  std::vector<ConstraintCheck> take() { return std::move(checks_); }

 private:
  static double slack(double lhs, double rhs, double scale) {
    return kRelTol * (scale < 0.0 ? max_abs({lhs, rhs}) : scale);
  }
  void add(const std::string& id, bool ok, double lhs, double rhs, const char* rel) {
    checks_.push_back(ConstraintCheck{id, ok, lhs, rhs, rel});
  }

  std::vector<ConstraintCheck> checks_;
};

// Fills violated/feasible and, when feasible, the theta interval and rate.
// `theta` overrides the (a+b)/2 choice.
void finish(RateCertificate& cert, std::vector<ConstraintCheck> checks,
            std::optional<double> theta = std::nullopt) {
  cert.checks = std::move(checks);
  for (const auto& c : cert.checks) {
    if (!c.satisfied &&
        std::find(cert.violated.begin(), cert.violated.end(), c.id) == cert.violated.end()) {
      cert.violated.push_back(c.id);
    }
  }
  if (!cert.violated.empty()) return;
  if (!(cert.b >= 0.0 && cert.b < cert.a && cert.a < 1.0 && cert.a > 0.0)) {
    cert.violated.push_back("theta-interval");
    return;
  }
  const ThetaInterval iv = theta_interval(cert.a, cert.b);
  if (cert.b > 0.0 && !(cert.b < iv.lo)) {
    cert.violated.push_back("theta-interval");
    return;
  }
  cert.theta_lo = iv.lo;
  cert.theta_hi = iv.hi;
  double th = theta ? *theta : (cert.a + cert.b) / 2.0;
  if (!theta && th < iv.lo) th = (iv.lo + iv.hi) / 2.0;
  cert.theta_default = th;
  cert.rate = 1.0 - (cert.a - th);
  cert.feasible = true;
}

RateCertificate base(Regime regime, double mu, double lip) {
  if (!(mu > 0.0) || !(lip >= mu) || !std::isfinite(lip)) {
    throw std::invalid_argument("constants must satisfy 0 < mu <= lip");
  }
  RateCertificate cert;
  cert.regime = regime;
  cert.mu = mu;
  cert.lip = lip;
  cert.a = kNaN;
  cert.b = kNaN;
  return cert;
}

const char* yes_no(bool v) { return v ? "yes" : "no"; }

}  // namespace

std::string_view to_string(Regime r) noexcept {
  switch (r) {
    case Regime::ViUnrestricted:
      return "vi-unrestricted";
    case Regime::ViRestricted:
      return "vi-restricted";
    case Regime::Opt:
      return "opt";
    case Regime::Vanilla:
      return "vanilla";
    case Regime::Extragradient:
      return "extragradient";
    case Regime::ExtragradientRestricted:
      return "extragradient-restricted";
    case Regime::Ogda:
      return "ogda";
  }
  return "unknown";
}

Regime parse_regime(std::string_view name) {
  for (Regime r : {Regime::ViUnrestricted, Regime::ViRestricted, Regime::Opt, Regime::Vanilla,
                   Regime::Extragradient, Regime::ExtragradientRestricted, Regime::Ogda}) {
    if (to_string(r) == name) return r;
  }
  throw std::invalid_argument("unknown regime '" + std::string(name) + "'");
}

const ConstraintCheck* RateCertificate::find(std::string_view id) const {
  for (const auto& c : checks) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

ThetaInterval theta_interval(double a, double b) {
  if (!(a > 0.0 && a < 1.0)) throw std::invalid_argument("theta_interval needs 0 < a < 1");
  if (!(b >= 0.0)) throw std::invalid_argument("theta_interval needs b >= 0");
  if (!(b < a)) throw std::invalid_argument("theta_interval needs b < a");
  if (b == 0.0) return ThetaInterval{0.0, a};
  const double m = 1.0 - a;
  return ThetaInterval{(std::sqrt(m * m + 4.0 * b) - m) / 2.0, a};
}

RateCertificate certify_vi_unrestricted(double mu, double lip, const ViParams& p) {
  RateCertificate cert = base(Regime::ViUnrestricted, mu, lip);
  const double al = p.alpha, be = p.beta, ga = p.gamma, et = p.eta, ta = p.tau, L = lip;
  const double r = et > 0.0 ? al / et : kNaN;
  const double c = ga - r * be;
  const double tl = ta * L;
  const double absx = std::abs(-2.0 * r * be - 2.0 * r * c);
  cert.a = al * mu - 3.0 * ga - tl * (3.0 + 2.0 * tl + 2.0 * r + 2.0 * al * L) - 2.0 * c * c - absx;
  cert.b = 2.0 * c * c + ga + 2.0 * tl * (1.0 + tl + r + al * L) + absx;

  Checker ck;
  const double line1 = al * mu - 4.0 * ga - tl * (5.0 + 4.0 * tl + 4.0 * r + 4.0 * al * L) -
                       4.0 * c * c - 4.0 * std::abs(-r * be - r * ga + r * r * be);
  ck.gt("epc-line-1", line1, 0.0);
  ck.lt("epc-line-2", cert.a, 1.0);
  const double half_abs = std::abs(-r * be - r * c);
  const double line3 = al * al * L * L + r * r + r * tl - 2.0 * r + 2.0 * al * mu +
                       al * ta * L * L + half_abs;
  ck.le("epc-line-3", line3, 0.0,
        al * al * L * L + r * r + std::abs(r * tl) + 2.0 * std::abs(r) + 2.0 * al * mu +
            al * ta * L * L + half_abs);
  ck.ge("epc-line-4", -2.0 * al + 2.0 * al * r, 0.0, 2.0 * al);
  ck.ge("epc-line-5", 2.0 * ta * c, 0.0, 2.0 * ta * max_abs({ga, r * be}));
  ck.eq("epc-line-6", (ga * et - al * be) * al, 0.0, al * max_abs({ga * et, al * be}));
  for (double x : {al, be, ga, ta}) ck.nonneg("epc-line-7", x);
  ck.gt("epc-line-7", et, 0.0);
  ck.gt("eta-positive", et, 0.0);
  finish(cert, ck.take());

  auto ok = [&](const char* id) {
    const auto* c = cert.find(id);
    return c && c->satisfied;
  };
  cert.info["guideline-1"] =
      yes_no(ok("epc-line-3") && ok("epc-line-4") && ok("epc-line-5") && ok("epc-line-6"));
  cert.info["guideline-2"] = yes_no(cert.a > 0.0 && cert.a < 1.0);
  cert.info["guideline-3"] = yes_no(cert.b >= 0.0 && cert.b < cert.a);
  cert.info["operator-domain"] = "R^n";
  return cert;
}

RateCertificate certify_vi_restricted(double mu, double lip, const ViParams& p) {
  RateCertificate cert = base(Regime::ViRestricted, mu, lip);
  const double al = p.alpha, be = p.beta, ga = p.gamma, et = p.eta, ta = p.tau, L = lip;
  const double g = std::abs(ga - be);
  const double u = ta * L;
  const double s = al * mu - 4.0 * ga - 2.0 * g - 2.0 * u;
  const double t = 2.0 * ga + 2.0 * g + 2.0 * u;
  cert.u = u;
  cert.s = s;
  cert.t = t;
  if (1.0 - u > 0.0) {
    cert.a = (s - u) / (1.0 - u);
    cert.b = t / (1.0 - u);
  }
  cert.a_as_printed = (al * mu + 4.0 * ga + 2.0 * g - 3.0 * u) / (1.0 - u);

  Checker ck;
  ck.nonneg("exp2-line-1", u);
  ck.lt("exp2-line-1", u, s);
  ck.lt("exp2-line-1", s, 1.0);
  ck.lt("exp2-line-2", t, s - u);
  ck.le("exp2-line-3", al * L + g - 1.0, 0.0, al * L + g + 1.0);
  ck.le("exp2-line-4", al * L + 2.0 * al * mu + u + 2.0 * ga - 1.0, 0.0,
        al * L + 2.0 * al * mu + u + 2.0 * ga + 1.0);
  ck.eq("exp2-line-5", et, al);
  ck.eq("eta-equals-alpha", et, al);
  for (double x : {al, be, ga, et, ta}) ck.nonneg("exp2-line-6", x);
  finish(cert, ck.take());
  cert.info["u-reading"] = "u = tau L";
  return cert;
}

RateCertificate certify_opt(double mu, double lip, const OptParams& p) {
  RateCertificate cert = base(Regime::Opt, mu, lip);
  cert.potential = PotentialKind::Energy;
  const double th = p.theta, C = p.c, L = lip;
  const auto t = [&](std::size_t i) { return p.ti(i); };
  cert.c = C;
  cert.a = th;
  cert.b = 0.0;

  Checker ck;
  ck.eq("oec-line-1", th, 2.0 * t(9) * C);
  const double d = 1.0 - 2.0 * t(8) * t(9) * C;
  ck.eq("oec-line-2", t(1), (1.0 - th) / d);
  ck.eq("oec-line-3", t(2), 2.0 * t(7) * t(9) * C / d);
  ck.lt("oec-line-4", t(3), 1.0);
  ck.le("oec-line-5", t(7), 1.0 - th);
  ck.eq("oec-line-6", t(8), 1.0 - t(7), max_abs({t(7), t(8), 1.0}));
  ck.eq("t7-t8-sum", t(7) + t(8), 1.0);
  ck.le("oec-line-7", t(8) * C, mu * th / 2.0);
  const double num =
      2.0 * t(4) * (1.0 - t(3)) - (1.0 + t(3)) * (1.0 + t(3)) * t(4) * t(4) + 2.0 * t(3) * (t(6) - t(5));
  ck.le("oec-line-8", t(9) * t(9) * C, num / (2.0 * L));
  ck.gt("theta-range", th, 0.0);
  ck.lt("theta-range", th, 1.0);
  for (double x : p.t) ck.nonneg("oec-nonnegative", x);
  ck.gt("oec-nonnegative", C, 0.0);
  finish(cert, ck.take(), 0.0);
  return cert;
}

RateCertificate certify_vanilla(double mu, double lip, const ViParams& p) {
  RateCertificate cert = base(Regime::Vanilla, mu, lip);
  const double al = p.alpha, L = lip;
  cert.a = 2.0 * al * mu - al * al * L * L;
  cert.b = 0.0;
  Checker ck;
  for (double x : {p.beta, p.gamma, p.eta, p.tau}) ck.eq("vanilla-pattern", x, 0.0, 0.0);
  ck.gt("alpha-positive", al, 0.0);
  ck.gt("vanilla-rate", cert.a, 0.0);
  ck.lt("vanilla-rate", cert.a, 1.0);
  finish(cert, ck.take(), 0.0);
  return cert;
}

RateCertificate certify_extragradient(double mu, double lip, const ViParams& p, bool restricted) {
  RateCertificate cert =
      base(restricted ? Regime::ExtragradientRestricted : Regime::Extragradient, mu, lip);
  const double al = p.alpha, L = lip;
  cert.a = al * mu;
  cert.b = 0.0;
  Checker ck;
  for (double x : {p.beta, p.gamma, p.tau}) ck.eq("extragradient-pattern", x, 0.0, 0.0);
  ck.eq("eta-equals-alpha", p.eta, al);
  ck.gt("alpha-positive", al, 0.0);
  const double coef = al * al * L * L + 2.0 * al * mu - 1.0;
  ck.le("eg-half-coefficient", coef, 0.0, al * al * L * L + 2.0 * al * mu + 1.0);
  finish(cert, ck.take(), 0.0);
  if (!restricted) cert.info["operator-domain"] = "R^n";
  return cert;
}

RateCertificate certify_ogda(double mu, double lip, const ViParams& p) {
  RateCertificate cert = base(Regime::Ogda, mu, lip);
  cert.potential = PotentialKind::Ogda;
  const double sigma = mu / lip;
  cert.a = 1.0 - 1.0 / (1.0 + sigma);
  cert.b = 0.0;
  Checker ck;
  for (double x : {p.beta, p.gamma, p.eta}) ck.eq("ogda-pattern", x, 0.0, 0.0);
  ck.eq("ogda-alpha", p.alpha, 1.0 / (2.0 * lip));
  ck.eq("ogda-tau", p.tau, p.alpha / (1.0 + sigma));
  finish(cert, ck.take(), 0.0);
  return cert;
}

RateCertificate certify_method(ViMethod method, bool restricted, double mu, double lip,
                               const ViParams& p) {
  switch (method) {
    case ViMethod::Vanilla:
      return certify_vanilla(mu, lip, p);
    case ViMethod::Extragradient:
      return certify_extragradient(mu, lip, p, restricted);
    case ViMethod::Ogda:
      return certify_ogda(mu, lip, p);
    case ViMethod::ExtraPoint:
      return restricted ? certify_vi_restricted(mu, lip, p) : certify_vi_unrestricted(mu, lip, p);
    case ViMethod::HeavyBall:
    case ViMethod::Nesterov:
      break;
  }
  ViParams full = p;
  if (method == ViMethod::Nesterov) full.gamma = p.beta;
  return certify_vi_unrestricted(mu, lip, full);
}

ViParams default_vi_params(Regime regime, double mu, double lip) {
  if (!(mu > 0.0) || !(lip >= mu)) throw std::invalid_argument("constants must satisfy 0 < mu <= lip");
  const double sigma = mu / lip;
  ViParams p;
  switch (regime) {
    case Regime::ViUnrestricted:
      p.alpha = 1.0 / (4.0 * lip);
      p.beta = sigma / 64.0;
      p.gamma = sigma / 64.0;
      p.eta = 1.0 / (4.0 * lip);
      p.tau = sigma / (128.0 * lip);
      return p;
    case Regime::ViRestricted:
      p.alpha = 1.0 / (4.0 * lip);
      p.eta = p.alpha;
      p.beta = mu / (64.0 * lip);
      p.gamma = p.beta;
      p.tau = mu / (64.0 * lip * lip);
      return p;
    case Regime::Vanilla:
      p.alpha = mu / (lip * lip);
      return p;
    case Regime::Extragradient:
    case Regime::ExtragradientRestricted:
      p.alpha = 1.0 / (4.0 * lip);
      p.eta = p.alpha;
      return p;
    case Regime::Ogda:
      p.alpha = 1.0 / (2.0 * lip);
      p.tau = p.alpha / (1.0 + sigma);
      return p;
    case Regime::Opt:
      break;
  }
  throw std::invalid_argument("use default_opt_params for the opt regime");
}

OptParams default_opt_params(double mu, double lip, double delta) {
  if (!(mu > 0.0) || !(lip >= mu)) throw std::invalid_argument("constants must satisfy 0 < mu <= lip");
  if (!(delta > 0.0 && delta < 1.0)) throw std::invalid_argument("delta must lie in (0, 1)");
  const double theta = std::sqrt(mu / lip);
  const double q = (1.0 + delta) * (1.0 + delta);
  OptParams p;
  p.delta = delta;
  p.theta = theta;
  p.c = mu / 2.0;
  p.t = {1.0 / (1.0 + theta),
         theta / (1.0 + theta),
         delta,
         (1.0 - delta) / q,
         1.0 / q,
         3.0 / q,
         1.0 - theta,
         theta,
         1.0 / std::sqrt(mu * lip)};
  return p;
}

std::size_t iteration_bound(const RateCertificate& cert, double initial_gap, double tol) {
  if (!cert.feasible) throw std::invalid_argument("iteration_bound needs a feasible certificate");
  if (!(initial_gap > 0.0) || !(tol > 0.0)) {
    throw std::invalid_argument("iteration_bound needs positive gap and tolerance");
  }
  double scale = 1.0;
  switch (cert.potential) {
    case PotentialKind::TwoTerm:
      scale = 1.0 + cert.theta_default;
      break;
    case PotentialKind::Ogda:
      scale = 2.0;
      break;
    case PotentialKind::Energy:
      break;
  }
  if (tol >= scale * initial_gap) return 0;
  // ln(1/rate) with rate = 1 - (a - theta), kept accurate for rates near 1.
  const double contraction = -std::log1p(-(cert.a - cert.theta_default));
  return static_cast<std::size_t>(std::ceil(std::log(scale * initial_gap / tol) / contraction));
}

double residual_tol_to_dist_sq(double residual_tol, double lip) {
  const double d = residual_tol / (2.0 + lip);
  return d * d;
}

void write_certificate(std::ostream& out, const RateCertificate& cert) {
  auto num = [](double v) { return format_double(v); };
  out << "regime = " << to_string(cert.regime) << '\n';
  out << "mu = " << num(cert.mu) << '\n';
  out << "lip = " << num(cert.lip) << '\n';
  out << "feasible = " << (cert.feasible ? "true" : "false") << '\n';
  out << "a = " << num(cert.a) << '\n';
  out << "b = " << num(cert.b) << '\n';
  if (cert.feasible) {
    out << "theta_lo = " << num(cert.theta_lo) << '\n';
    out << "theta_hi = " << num(cert.theta_hi) << '\n';
    out << "theta_default = " << num(cert.theta_default) << '\n';
    out << "rate = " << num(cert.rate) << '\n';
  }
  out << "potential = " << to_string(cert.potential) << '\n';
  if (cert.regime == Regime::Opt) out << "c = " << num(cert.c) << '\n';
  if (cert.s) out << "s = " << num(*cert.s) << '\n';
  if (cert.t) out << "t = " << num(*cert.t) << '\n';
  if (cert.u) out << "u = " << num(*cert.u) << '\n';
  if (cert.a_as_printed) out << "a_as_printed = " << num(*cert.a_as_printed) << '\n';
  out << "violated = ";
  if (cert.violated.empty()) out << "none";
  for (std::size_t i = 0; i < cert.violated.size(); ++i) {
    out << (i ? "," : "") << cert.violated[i];
  }
  out << '\n';
  std::vector<std::string> seen;
  for (const auto& c : cert.checks) {
    if (std::find(seen.begin(), seen.end(), c.id) != seen.end()) continue;
    seen.push_back(c.id);
    const ConstraintCheck* shown = &c;
    for (const auto& other : cert.checks) {
      if (other.id == c.id && !other.satisfied) {
        shown = &other;
        break;
      }
    }
    out << "check." << c.id << " = " << (shown->satisfied ? "ok" : "violated") << ' '
        << num(shown->lhs) << ' ' << shown->relation << ' ' << num(shown->rhs) << '\n';
  }
  for (const auto& [k, v] : cert.info) out << "info." << k << " = " << v << '\n';
}

}  // namespace viaccel
