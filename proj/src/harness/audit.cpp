#include "viaccel/audit.hpp"

#include <cmath>
#include <stdexcept>

namespace viaccel {
namespace {

const Vector& require_solution(const MonotoneProblem& problem) {
  if (!problem.solution()) throw std::invalid_argument("lemma audit needs a known solution");
  return *problem.solution();
}

void total(LemmaAudit& audit) {
  audit.rhs = 0.0;
  audit.scale = std::abs(audit.lhs);
  for (const auto& [name, v] : audit.terms) {
    audit.rhs += v;
    audit.scale += std::abs(v);
  }
}

}  // namespace

LemmaAudit audit_lemma1(const MonotoneProblem& problem, const ViState& s, const ViParams& p) {
  const Vector& zs = require_solution(problem);
  if (!(p.eta > 0.0)) throw std::invalid_argument("lemma 1 needs eta > 0");
  HalfStep half{s.z_curr, s.f_curr};
  const ViState next = step_extra_point(problem, s, p, false, &half);

  const double al = p.alpha, be = p.beta, ga = p.gamma, et = p.eta, ta = p.tau;
  const double mu = problem.mu(), L = problem.lip();
  const double c = ga - al * be / et;
  const double absx = std::abs(-2.0 * al * be / et - 2.0 * al / et * c);

  const Vector df_half = half.f_half - s.f_curr;
  const Vector df_prev = s.f_curr - s.f_prev;
  const Vector dz_half = s.z_curr - half.z_half;
  const Vector dz_prev = s.z_curr - s.z_prev;

  LemmaAudit audit;
  audit.lhs = squared_distance(next.z_curr, zs);
  audit.terms["curr"] = (1.0 - al * mu + 3.0 * ga +
                         ta * L * (3.0 + 2.0 * ta * L + 2.0 * al / et + 2.0 * al * L) +
                         2.0 * c * c + absx) *
                        squared_distance(s.z_curr, zs);
  audit.terms["prev"] =
      (2.0 * c * c + ga + 2.0 * ta * L * (1.0 + ta * L + al / et + al * L) + absx) *
      squared_distance(s.z_prev, zs);
  audit.terms["half"] = (al * al * L * L + al * al / (et * et) + al * ta * L / et -
                         2.0 * al / et + 2.0 * al * mu + al * ta * L * L +
                         std::abs(-al * be / et - al / et * c)) *
                        dz_half.squared_norm();
  audit.terms["cross-half"] = (-2.0 * al + 2.0 * al * al / et) * df_half.dot(dz_half);
  audit.terms["cross-momentum"] = -2.0 * al * c * df_half.dot(dz_prev);
  audit.terms["cross-optimism"] = -2.0 * ta * c * df_prev.dot(dz_prev);
  total(audit);
  return audit;
}

LemmaAudit audit_lemma3(const MonotoneProblem& problem, const ViState& s, const ViParams& p) {
  const Vector& zs = require_solution(problem);
  HalfStep half{s.z_curr, s.f_curr};
  const ViState next = step_extra_point(problem, s, p, true, &half);

  const double al = p.alpha, be = p.beta, ga = p.gamma, et = p.eta, ta = p.tau;
  const double mu = problem.mu(), L = problem.lip();
  const double g = std::abs(ga - be);

  LemmaAudit audit;
  audit.lhs = (1.0 - ta * L) * squared_distance(next.z_curr, zs);
  audit.terms["curr"] =
      (1.0 - al * mu + 4.0 * ga + 2.0 * g + 2.0 * ta * L) * squared_distance(s.z_curr, zs);
  audit.terms["prev"] = (2.0 * ga + 2.0 * g + 2.0 * ta * L) * squared_distance(s.z_prev, zs);
  audit.terms["next-half"] =
      (al * L + g - 1.0) * squared_distance(next.z_curr, half.z_half);
  audit.terms["half-curr"] =
      (al * L + 2.0 * al * mu + 2.0 * ga - 1.0) * squared_distance(half.z_half, s.z_curr);
  audit.terms["eta-alpha"] = 2.0 * (et - al) * s.f_curr.dot(next.z_curr - half.z_half);
  total(audit);
  return audit;
}

}  // namespace viaccel
