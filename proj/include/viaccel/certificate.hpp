#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "viaccel/params.hpp"
#include "viaccel/trace.hpp"

namespace viaccel {

enum class Regime {
  ViUnrestricted,
  ViRestricted,
  Opt,
  Vanilla,
  Extragradient,
  ExtragradientRestricted,
  Ogda,
};

std::string_view to_string(Regime r) noexcept;
// Accepts the names printed by to_string. Throws std::invalid_argument.
Regime parse_regime(std::string_view name);

struct ConstraintCheck {
  std::string id;
  bool satisfied = false;
  double lhs = 0.0;
  double rhs = 0.0;
  // One of "<", "<=", ">", ">=", "=".
  std::string relation;
};

struct RateCertificate {
  Regime regime = Regime::ViUnrestricted;
  double mu = 0.0;
  double lip = 0.0;
  bool feasible = false;
  // ||z^{k+1}-z*||^2 <= (1-a)||z^k-z*||^2 + b||z^{k-1}-z*||^2
  double a = 0.0;
  double b = 0.0;
  double theta_lo = 0.0;
  double theta_hi = 0.0;
  double theta_default = 0.0;
  double rate = 1.0;
  std::vector<std::string> violated;
  std::vector<ConstraintCheck> checks;
  // Restricted-domain reduction (1-u)||z^{k+1}-z*||^2 <= (1-s)... + t...
  std::optional<double> s;
  std::optional<double> t;
  std::optional<double> u;
  // Restricted regime: the a-formula with the signs as printed in the
  // theorem statement, kept for comparison with a = (s-u)/(1-u).
  std::optional<double> a_as_printed;
  PotentialKind potential = PotentialKind::TwoTerm;
  // Energy constant C for Regime::Opt.
  double c = 0.0;
  // Informational flags (guideline checks, scope notes). Never affect `feasible`.
  std::map<std::string, std::string> info;

  const ConstraintCheck* find(std::string_view id) const;
};

struct ThetaInterval {
  double lo;
  double hi;
};

// Admissible theta for ||z^{k+1}||^2 <= (1-a)||z^k||^2 + b||z^{k-1}||^2.
// lo = (sqrt((1-a)^2 + 4b) - (1-a))/2, hi = a (exclusive). For b = 0 this is
// [0, a). Throws std::invalid_argument unless 0 <= b < a < 1.
ThetaInterval theta_interval(double a, double b);

RateCertificate certify_vi_unrestricted(double mu, double lip, const ViParams& p);
RateCertificate certify_vi_restricted(double mu, double lip, const ViParams& p);
RateCertificate certify_opt(double mu, double lip, const OptParams& p);

// Single-potential certificates of the classical methods (b = 0, theta = 0).
RateCertificate certify_vanilla(double mu, double lip, const ViParams& p);
RateCertificate certify_extragradient(double mu, double lip, const ViParams& p, bool restricted);
// Only the step sizes alpha = 1/(2L), tau = alpha/(1+sigma) are certified.
RateCertificate certify_ogda(double mu, double lip, const ViParams& p);

// Picks the certificate matching a method and variant. HeavyBall and Nesterov
// go through certify_vi_unrestricted and come back infeasible (eta = 0).
RateCertificate certify_method(ViMethod method, bool restricted, double mu, double lip,
                               const ViParams& p);

// Example parameters for each VI regime; Opt is handled by default_opt_params.
ViParams default_vi_params(Regime regime, double mu, double lip);
OptParams default_opt_params(double mu, double lip, double delta = 0.5);

// Smallest k with rate^k * scale * initial_gap <= tol, where scale is 1 + theta
// for the two-term potential, 2 for the OGDA potential and 1 for the energy.
// initial_gap is ||z^0 - z*||^2 (or the initial energy). Throws
// std::invalid_argument on an infeasible certificate or non-positive inputs.
std::size_t iteration_bound(const RateCertificate& cert, double initial_gap, double tol);

// Squared distance that guarantees natural residual <= residual_tol, using
// residual(z) <= (2 + L) ||z - z*||.
double residual_tol_to_dist_sq(double residual_tol, double lip);

// key = value lines; checks as "check.<id> = ok|violated lhs rel rhs".
void write_certificate(std::ostream& out, const RateCertificate& cert);

}  // namespace viaccel
