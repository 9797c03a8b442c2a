#include "viaccel/run.hpp"

#include <chrono>
#include <cmath>
#include <optional>

#include "viaccel/merit.hpp"
#include "viaccel/problem_io.hpp"

namespace viaccel {
namespace {

using Clock = std::chrono::steady_clock;

std::int64_t since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start).count();
}

bool keep(std::size_t k, std::size_t thinning) { return thinning <= 1 || k % thinning == 0; }

std::optional<double> vi_potential(const MonotoneProblem& problem, const PotentialSpec& spec,
                                   const ViState& s) {
  const auto& sol = problem.solution();
  if (!sol) return std::nullopt;
  const double d_curr = squared_distance(s.z_curr, *sol);
  switch (spec.kind) {
    case PotentialKind::TwoTerm:
      return d_curr + spec.theta * squared_distance(s.z_prev, *sol);
    case PotentialKind::Ogda: {
      const double sigma = problem.sigma();
      const Vector e = s.z_curr - *sol;
      const Vector df = s.f_prev - s.f_curr;
      const double coef_cross = 1.0 / (problem.lip() * (1.0 + sigma));
      const double coef_step = (1.0 - 1.0 / (2.0 * (1.0 + sigma))) / (1.0 + sigma);
      return d_curr + coef_cross * e.dot(df) + coef_step * squared_distance(s.z_curr, s.z_prev);
    }
    case PotentialKind::Energy:
      break;
  }
  return std::nullopt;
}

class Recorder {
 public:
  Recorder(IterateTrace& trace, const RunOptions& options) : trace_(trace), options_(options) {}

  void add(TraceRecord r, const Vector& point, bool force) {
    if (!force && !keep(r.k, options_.thinning)) {
      pending_ = std::move(r);
      pending_point_ = point;
      return;
    }
    push(std::move(r), point);
    pending_.reset();
  }

  // Make sure the last computed iterate is recorded.
  void flush() {
    if (pending_) push(std::move(*pending_), *pending_point_);
    pending_.reset();
  }

 private:
  void push(TraceRecord r, const Vector& point) {
    trace_.records.push_back(std::move(r));
    if (options_.keep_iterates) trace_.iterates.push_back(point);
  }

  IterateTrace& trace_;
  const RunOptions& options_;
  std::optional<TraceRecord> pending_;
  std::optional<Vector> pending_point_;
};

void check_coherence(const MonotoneProblem& problem, const ViState& s) {
  if (problem.evaluate(s.z_curr) != s.f_curr || problem.evaluate(s.z_prev) != s.f_prev) {
    throw CacheCoherenceError("cached operator values are stale at iteration " +
                              std::to_string(s.k));
  }
}

bool finite_record(const TraceRecord& r) {
  return std::isfinite(r.merit_primary) && std::isfinite(r.merit_aux) &&
         (!r.dist_sq || std::isfinite(*r.dist_sq)) && (!r.potential || std::isfinite(*r.potential));
}

bool finite_state(const ViState& s) { return s.z_curr.all_finite() && s.f_curr.all_finite(); }

}  // namespace

IterateTrace run(const MonotoneProblem& problem, const ViMethodSpec& method, const Vector& z0,
                 const StopCriteria& stop, const RunOptions& options) {
  const auto start = Clock::now();
  IterateTrace trace;
  trace.method = std::string(to_string(method.method));
  trace.params = method.params;
  trace.mu = problem.mu();
  trace.lip = problem.lip();
  trace.potential_kind = options.potential.kind;
  trace.potential_theta = options.potential.theta;
  const SmoothObjective* obj = options.objective;
  if (obj) {
    trace.metadata["merit_primary"] = "gradient-norm";
    trace.metadata["merit_aux"] = std::string(aux_merit_name(*obj));
    if (obj->minimizer()) trace.solution_norm = obj->minimizer()->norm();
  } else {
    trace.metadata["merit_primary"] = std::string(primary_merit_name(problem));
    trace.metadata["merit_aux"] = "natural-residual";
  }
  if (problem.solution()) trace.solution_norm = problem.solution()->norm();
  trace.metadata["restricted"] = method.restricted ? "1" : "0";

  Recorder recorder(trace, options);
  auto record = [&](const ViState& s, bool force) {
    const Merit m = obj ? merit(*obj, s.z_curr, s.f_curr) : merit(problem, s.z_curr, s.f_curr);
    TraceRecord r;
    r.k = s.k;
    r.merit_primary = m.primary;
    r.merit_aux = m.aux;
    if (problem.solution()) r.dist_sq = squared_distance(s.z_curr, *problem.solution());
    r.potential = vi_potential(problem, options.potential, s);
    r.elapsed_ns = since(start);
    if (!finite_record(r)) return std::optional<double>();
    recorder.add(std::move(r), s.z_curr, force);
    return std::optional<double>(obj ? m.primary : m.aux);
  };

  ViState s = ViState::initial(problem, z0);
  std::optional<double> residual;
  if (finite_state(s)) residual = record(s, true);
  if (!residual) {
    trace.terminated_by = Termination::Divergence;
    throw DivergenceError("initial point has non-finite merits", std::move(trace));
  }

  trace.terminated_by = Termination::MaxIter;
  while (true) {
    if (stop.residual_tol > 0.0 && *residual <= stop.residual_tol) {
      trace.terminated_by = Termination::Tolerance;
      break;
    }
    if (s.k >= stop.max_iter) break;
    ViState next = step(problem, s, method.method, method.params, method.restricted);
    if (finite_state(next)) residual = record(next, false);
    if (!finite_state(next) || !residual) {
      recorder.flush();
      trace.terminated_by = Termination::Divergence;
      trace.last_k = s.k;
      throw DivergenceError("non-finite iterate at k = " + std::to_string(next.k), std::move(trace));
    }
    s = std::move(next);
    if (options.coherence_check_every > 0 && s.k % options.coherence_check_every == 0) {
      check_coherence(problem, s);
    }
  }
  recorder.flush();
  trace.last_k = s.k;
  return trace;
}

IterateTrace run(const SmoothObjective& objective, const OptMethodSpec& method, const Vector& x0,
                 const StopCriteria& stop, const RunOptions& options) {
  if (x0.size() != objective.dimension()) {
    throw std::invalid_argument("initial point has the wrong dimension");
  }
  const auto start = Clock::now();
  const double c = options.potential.kind == PotentialKind::Energy && options.potential.c > 0.0
                       ? options.potential.c
                       : method.params.c;
  IterateTrace trace;
  trace.method = "opt-extra-point";
  trace.params = method.params;
  trace.mu = objective.mu();
  trace.lip = objective.lip();
  trace.potential_kind = PotentialKind::Energy;
  trace.potential_theta = method.params.theta;
  trace.metadata["merit_primary"] = "gradient-norm";
  trace.metadata["merit_aux"] = std::string(aux_merit_name(objective));
  trace.metadata["y_rule"] = std::string(to_string(method.y_rule));
  trace.metadata["energy_c"] = format_double(c);
  if (objective.minimizer()) trace.solution_norm = objective.minimizer()->norm();
  if (objective.optimal_value()) trace.metadata["optimal_value"] = format_double(*objective.optimal_value());

  Recorder recorder(trace, options);
  const auto& xs = objective.minimizer();
  auto record = [&](const OptState& s, bool force) {
    const Vector g = objective.gradient(s.x_curr);
    const Merit m = merit(objective, s.x_curr, g);
    TraceRecord r;
    r.k = s.k;
    r.merit_primary = m.primary;
    r.merit_aux = m.aux;
    if (xs) {
      r.dist_sq = squared_distance(s.x_curr, *xs);
      if (auto gap = objective.suboptimality(s.x_curr)) {
        r.potential = *gap + c * squared_distance(s.v_curr, *xs);
      }
    }
    r.elapsed_ns = since(start);
    if (!finite_record(r)) return std::optional<double>();
    recorder.add(std::move(r), s.x_curr, force);
    return std::optional<double>(m.primary);
  };

  OptState s = OptState::initial(x0);
  std::optional<double> residual = record(s, true);
  if (!residual) {
    trace.terminated_by = Termination::Divergence;
    throw DivergenceError("initial point has non-finite merits", std::move(trace));
  }
  trace.terminated_by = Termination::MaxIter;
  while (true) {
    if (stop.residual_tol > 0.0 && *residual <= stop.residual_tol) {
      trace.terminated_by = Termination::Tolerance;
      break;
    }
    if (s.k >= stop.max_iter) break;
    OptState next = step_opt_extra_point(objective, s, method.params, method.y_rule);
    const bool finite = next.x_curr.all_finite() && next.v_curr.all_finite();
    if (finite) residual = record(next, false);
    if (!finite || !residual) {
      recorder.flush();
      trace.terminated_by = Termination::Divergence;
      trace.last_k = s.k;
      throw DivergenceError("non-finite iterate at k = " + std::to_string(next.k), std::move(trace));
    }
    s = std::move(next);
  }
  recorder.flush();
  trace.last_k = s.k;
  return trace;
}

}  // namespace viaccel
