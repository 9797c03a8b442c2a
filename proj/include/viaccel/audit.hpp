#pragma once

#include <map>
#include <string>

#include "viaccel/params.hpp"
#include "viaccel/problem.hpp"
#include "viaccel/steps.hpp"

namespace viaccel {

// One step's measured left-hand side against the lemma's right-hand side,
// every term evaluated as printed. `scale` sums the magnitudes of all terms.
struct LemmaAudit {
  double lhs = 0.0;
  double rhs = 0.0;
  double scale = 0.0;
  std::map<std::string, double> terms;

  double slack() const { return rhs - lhs; }
};

// Per-iteration relation of the unrestricted extra-point step. Needs a known
// solution and eta > 0.
LemmaAudit audit_lemma1(const MonotoneProblem& problem, const ViState& s, const ViParams& p);

// Per-iteration relation of the restricted extra-point step, with
// (1 - tau L) ||z^{k+1} - z*||^2 on the left. Needs a known solution.
LemmaAudit audit_lemma3(const MonotoneProblem& problem, const ViState& s, const ViParams& p);

}  // namespace viaccel
