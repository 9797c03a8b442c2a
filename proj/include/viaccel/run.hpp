#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "viaccel/params.hpp"
#include "viaccel/problem.hpp"
#include "viaccel/steps.hpp"
#include "viaccel/trace.hpp"

namespace viaccel {

struct StopCriteria {
  std::size_t max_iter = 1000;
  // Natural residual for VI runs, gradient norm for optimization runs and for
  // VI runs carrying an objective. Zero disables the test.
  double residual_tol = 0.0;
};

struct PotentialSpec {
  PotentialKind kind = PotentialKind::TwoTerm;
  double theta = 0.0;  // TwoTerm
  double c = 0.0;      // Energy
};

struct RunOptions {
  // Keep records with k % thinning == 0 plus the last one.
  std::size_t thinning = 1;
  // Re-evaluate the cached F values every this many iterations (0 = never).
  std::size_t coherence_check_every = 0;
  // When set on a VI run, merits and stopping use this objective (gradient
  // methods applied to grad f).
  const SmoothObjective* objective = nullptr;
  PotentialSpec potential;
  bool keep_iterates = false;
};

struct ViMethodSpec {
  ViMethod method = ViMethod::ExtraPoint;
  ViParams params;
  bool restricted = false;
};

struct OptMethodSpec {
  OptParams params;
  YRule y_rule = YRule::YEqualsP;
};

// A non-finite iterate; `trace` holds everything recorded before it.
class DivergenceError : public std::runtime_error {
 public:
  DivergenceError(const std::string& what, IterateTrace trace)
      : std::runtime_error(what), trace_(std::move(trace)) {}
  const IterateTrace& trace() const noexcept { return trace_; }

 private:
  IterateTrace trace_;
};

// Cached F values no longer match fresh evaluations.
class CacheCoherenceError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

IterateTrace run(const MonotoneProblem& problem, const ViMethodSpec& method, const Vector& z0,
                 const StopCriteria& stop, const RunOptions& options = {});

// Optimization scheme from v^0 = x^0. The potential column is the energy with
// C = options.potential.c when set, params.c otherwise.
IterateTrace run(const SmoothObjective& objective, const OptMethodSpec& method, const Vector& x0,
                 const StopCriteria& stop, const RunOptions& options = {});

}  // namespace viaccel
