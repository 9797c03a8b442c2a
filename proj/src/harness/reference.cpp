#include "viaccel/reference.hpp"

#include <stdexcept>

#include "viaccel/certificate.hpp"
#include "viaccel/problem_io.hpp"
#include "viaccel/run.hpp"

namespace viaccel {

ReferenceOptimum reference_optimum(const SmoothObjective& objective, const Vector& x0,
                                   double grad_tol, std::size_t max_iter) {
  OptMethodSpec method;
  method.params = default_opt_params(objective.mu(), objective.lip());
  StopCriteria stop;
  stop.max_iter = max_iter;
  stop.residual_tol = grad_tol;
  RunOptions opts;
  opts.thinning = max_iter;
  opts.keep_iterates = true;
  const IterateTrace trace = run(objective, method, x0, stop, opts);
  if (trace.terminated_by != Termination::Tolerance) {
    throw std::runtime_error("reference run did not reach the gradient tolerance");
  }
  const Vector& x = trace.iterates.back();
  ReferenceOptimum ref{objective.with_reference(x, objective.value(x)), trace.last_k,
                       trace.records.back().merit_primary, {}};
  ref.metadata["reference_method"] = "opt-extra-point";
  ref.metadata["reference_iterations"] = std::to_string(trace.last_k);
  ref.metadata["reference_grad_norm"] = format_double(ref.grad_norm);
  ref.metadata["reference_grad_tol"] = format_double(grad_tol);
  ref.metadata["reference_value"] = format_double(objective.value(x));
  return ref;
}

}  // namespace viaccel
