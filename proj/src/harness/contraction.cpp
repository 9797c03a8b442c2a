#include "viaccel/contraction.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace viaccel {
namespace {

constexpr double kDistFloor = 1e-10;
constexpr double kEndpointDistFloor = 1e-13;

// Rounding in f(x) - f* when f* is far from zero.
double objective_noise(const IterateTrace& trace) {
  const auto it = trace.metadata.find("optimal_value");
  const double f = it == trace.metadata.end() ? 0.0 : std::abs(std::stod(it->second));
  return 64.0 * std::numeric_limits<double>::epsilon() * (1.0 + f);
}

}  // namespace

PotentialSpec potential_for(const RateCertificate& cert) {
  PotentialSpec spec;
  spec.kind = cert.potential;
  spec.theta = cert.theta_default;
  spec.c = cert.c;
  return spec;
}

ContractionReport check_contraction(const IterateTrace& trace, const RateCertificate& cert) {
  if (!cert.feasible) throw std::invalid_argument("check_contraction needs a feasible certificate");
  if (trace.records.empty()) throw std::invalid_argument("empty trace");
  for (const auto& r : trace.records) {
    if (!r.potential) throw std::invalid_argument("trace has no potential data");
  }
  if (trace.potential_kind != cert.potential) {
    throw std::invalid_argument("trace potential kind does not match the certificate");
  }
  if (cert.potential == PotentialKind::TwoTerm &&
      std::abs(trace.potential_theta - cert.theta_default) > 1e-15 * (1.0 + cert.theta_default)) {
    throw std::invalid_argument("trace potential theta does not match the certificate");
  }

  const double d = kDistFloor * (1.0 + trace.solution_norm.value_or(0.0));
  double floor = d * d;
  switch (cert.potential) {
    case PotentialKind::TwoTerm:
      floor *= 1.0 + cert.theta_default;
      break;
    case PotentialKind::Ogda:
      break;
    case PotentialKind::Energy:
      floor *= cert.lip + cert.c;
      floor = std::max(floor, objective_noise(trace));
      break;
  }

  ContractionReport rep;
  rep.max_violation = -cert.rate;
  const auto& recs = trace.records;
  for (std::size_t i = 1; i < recs.size(); ++i) {
    const double v1 = *recs[i - 1].potential;
    const double v2 = *recs[i].potential;
    const double bound = std::pow(cert.rate, static_cast<double>(recs[i].k - recs[i - 1].k));
    if (v1 <= floor && v2 <= floor) continue;
    ++rep.checked_steps;
    const double excess = v2 / std::max(v1, floor) - bound;
    rep.max_violation = std::max(rep.max_violation, excess);
    if (excess > kContractionTol) rep.violating_iters.push_back(recs[i].k);
  }

  // Endpoint bounds: OGDA distance and optimization gap, both with factor 2.
  const bool ogda = cert.potential == PotentialKind::Ogda;
  const bool energy = cert.potential == PotentialKind::Energy &&
                      trace.metadata.count("merit_aux") &&
                      trace.metadata.at("merit_aux") == "suboptimality";
  if (ogda || energy) {
    auto value = [&](const TraceRecord& r) { return ogda ? r.dist_sq.value_or(0.0) : r.merit_aux; };
    const double e = kEndpointDistFloor * (1.0 + trace.solution_norm.value_or(0.0));
    const double efloor = ogda ? e * e : std::max((cert.lip + cert.c) * e * e, objective_noise(trace));
    const double v0 = value(recs.front());
    rep.endpoint_checked = true;
    rep.endpoint_max_excess = -1.0;
    for (const auto& r : recs) {
      const double bound = 2.0 * std::pow(cert.rate, static_cast<double>(r.k)) * v0;
      const double lhs = value(r);
      if (v0 > 0.0) rep.endpoint_max_excess = std::max(rep.endpoint_max_excess, (lhs - bound) / v0);
      if (lhs > bound + efloor) rep.endpoint_violating_iters.push_back(r.k);
    }
  }
  return rep;
}

}  // namespace viaccel
