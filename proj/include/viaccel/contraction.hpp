#pragma once

#include <cstddef>
#include <vector>

#include "viaccel/certificate.hpp"
#include "viaccel/run.hpp"
#include "viaccel/trace.hpp"

namespace viaccel {

// Absolute slack on per-step ratios.
inline constexpr double kContractionTol = 1e-9;

struct ContractionReport {
  // max over consecutive records of V_{k2}/V_{k1} - rate^(k2-k1).
  double max_violation = 0.0;
  std::vector<std::size_t> violating_iters;
  std::size_t checked_steps = 0;
  // Endpoint bound (OGDA distance, optimization gap); excess is relative to
  // the initial value.
  bool endpoint_checked = false;
  double endpoint_max_excess = 0.0;
  std::vector<std::size_t> endpoint_violating_iters;

  bool ok() const { return violating_iters.empty() && endpoint_violating_iters.empty(); }
};

// Potential column a run must record to be checked against `cert`.
PotentialSpec potential_for(const RateCertificate& cert);

// Pairs whose earlier potential sits below a noise floor of
// (1e-10 (1 + ||z*||))^2 (scaled by 1 + theta, or L + C for the energy) use
// the floor as denominator. The energy floor is at least 64 eps (1 + |f*|). Throws std::invalid_argument when the trace lacks
// potentials, the certificate is infeasible, or the potential kinds differ.
ContractionReport check_contraction(const IterateTrace& trace, const RateCertificate& cert);

}  // namespace viaccel
