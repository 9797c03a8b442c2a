#include "viaccel/experiment.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>

#include "viaccel/generators.hpp"
#include "viaccel/presets.hpp"
#include "viaccel/reference.hpp"

namespace viaccel {
namespace {

void require_sigma(double sigma) {
  if (!(sigma > 0.0 && sigma <= 1.0)) throw ConfigError("sigma must lie in (0, 1]");
}

bool is_objective_kind(const PreparedProblem& p) { return p.objective.has_value(); }

void apply_overrides(const MethodConfig& c, ViParams& p) {
  if (c.alpha) p.alpha = *c.alpha;
  if (c.beta) p.beta = *c.beta;
  if (c.gamma) p.gamma = *c.gamma;
  if (c.eta) p.eta = *c.eta;
  if (c.tau) p.tau = *c.tau;
}

void apply_overrides(const MethodConfig& c, OptParams& p) {
  for (std::size_t i = 0; i < c.t.size(); ++i) {
    if (c.t[i]) p.t[i] = *c.t[i];
  }
  if (c.theta) p.theta = *c.theta;
  if (c.c) p.c = *c.c;
  if (c.delta) p.delta = *c.delta;
}

OptTableColumn opt_column(const PreparedProblem& p) {
  if (p.kind == "quadratic") return OptTableColumn::Quadratic;
  if (p.kind == "logistic") return OptTableColumn::NonQuadratic;
  throw ConfigError("table presets for optimization exist only for quadratic and logistic problems");
}

std::optional<std::size_t> first_stay_below(const IterateTrace& trace, bool use_distance,
                                            double tol) {
  std::optional<std::size_t> k;
  for (const auto& r : trace.records) {
    double v = r.merit_primary;
    if (use_distance) v = r.dist_sq ? std::sqrt(*r.dist_sq) : INFINITY;
    if (!(v <= tol)) {
      k.reset();
    } else if (!k) {
      k = r.k;
    }
  }
  if (trace.terminated_by == Termination::Divergence) k.reset();
  return k;
}

}  // namespace

ProblemFile generate_problem_file(const ProblemConfig& c) {
  if (c.n == 0) throw ConfigError("n must be positive");
  if (c.kind == "linear-vi") {
    require_sigma(c.sigma);
    return describe(gen_linear_vi(c.n, c.seed, c.sigma, c.constrained), c.seed, c.sigma,
                    c.constrained);
  }
  if (c.kind == "quadratic") {
    require_sigma(c.sigma);
    return describe(gen_quadratic(c.n, c.seed, c.sigma), c.seed, c.sigma);
  }
  if (c.kind == "logistic") {
    if (!(c.lambda > 0.0)) throw ConfigError("lambda must be positive");
    if (c.samples == 0) throw ConfigError("samples must be positive");
    return describe(gen_logistic(c.n, c.samples, c.lambda, c.seed), c.seed);
  }
  if (c.kind == "bilinear-saddle") {
    if (!(c.mu_x > 0.0) || !(c.mu_y > 0.0)) throw ConfigError("mu_x and mu_y must be positive");
    return describe(gen_bilinear_saddle(c.n, c.ny ? c.ny : c.n, c.seed, c.mu_x, c.mu_y), c.seed);
  }
  throw ConfigError("unknown problem kind '" + c.kind + "'");
}

PreparedProblem prepare_problem(const ProblemConfig& config, ProblemFile* image) {
  ProblemFile file = config.file.empty() ? generate_problem_file(config)
                                         : load_problem_file(config.file);
  LoadedProblem loaded = instantiate(file);
  const std::size_t n = loaded.vi.dimension();
  Vector x0(std::vector<double>(n, config.initial == "zeros" ? 0.0 : 1.0));
  PreparedProblem prepared{loaded.kind, std::move(loaded.vi), std::move(loaded.objective),
                           std::move(x0), {}};
  if (prepared.objective && !prepared.objective->minimizer()) {
    ReferenceOptimum ref = reference_optimum(*prepared.objective, Vector(n));
    prepared.objective = std::move(ref.objective);
    prepared.vi = gradient_problem(*prepared.objective);
    prepared.metadata = std::move(ref.metadata);
  }
  if (image) *image = std::move(file);
  return prepared;
}

ResolvedMethod resolve_method(const MethodConfig& c, const PreparedProblem& problem) {
  ResolvedMethod out;
  out.label = c.label;
  out.name = c.name;
  if (c.name == "opt-extra-point") {
    if (!problem.objective) throw ConfigError("opt-extra-point needs a smooth objective");
    const SmoothObjective& f = *problem.objective;
    OptMethodSpec spec;
    spec.y_rule = parse_y_rule(c.y_rule);
    if (c.params == "paper-default") {
      spec.params = default_opt_params(f.mu(), f.lip(), c.delta.value_or(0.5));
    } else if (c.params == "table") {
      spec.params = table_opt_preset(opt_column(problem), f.mu() / f.lip());
    } else {
      for (std::size_t i = 0; i < c.t.size(); ++i) {
        if (!c.t[i]) throw ConfigError("method." + c.label + ".t" + std::to_string(i + 1) + " is required");
      }
      if (!c.theta || !c.c) throw ConfigError("method." + c.label + " needs theta and c");
    }
    apply_overrides(c, spec.params);
    spec.params.validate();
    out.spec = spec;
    return out;
  }

  const ViMethod m = parse_vi_method(c.name);
  const bool whole = problem.vi.set().is_whole_space();
  out.restricted = c.variant == "restricted" || (c.variant == "auto" && !whole);
  if (!out.restricted && problem.vi.domain_restricted()) {
    throw ConfigError("method." + c.label + ": the operator is defined only on the feasible set");
  }
  ViMethodSpec spec;
  spec.method = m;
  spec.restricted = out.restricted;
  if (c.params == "paper-default") {
    spec.params = paper_default_vi(m, problem.vi.mu(), problem.vi.lip(), is_objective_kind(problem),
                                   out.restricted);
  } else if (c.params == "table") {
    if (problem.kind == "linear-vi") {
      spec.params = table_vi_preset(m, whole ? VITableColumn::Unconstrained : VITableColumn::Constrained);
    } else {
      auto p = table_opt_gradient_preset(m, opt_column(problem));
      if (!p) throw ConfigError("no table preset for " + c.name + " on " + problem.kind);
      spec.params = *p;
    }
  } else if (!c.alpha) {
    throw ConfigError("method." + c.label + ".alpha is required");
  }
  apply_overrides(c, spec.params);
  spec.params.validate();
  out.spec = spec;
  return out;
}

MethodRun run_method(const MethodConfig& config, const PreparedProblem& problem,
                     const OutputConfig& output, double summary_tol) {
  MethodRun result;
  result.method = resolve_method(config, problem);
  StopCriteria stop;
  stop.max_iter = config.max_iter;
  stop.residual_tol = config.residual_tol;
  RunOptions opts;
  opts.thinning = output.thinning;

  try {
    if (const auto* vi = std::get_if<ViMethodSpec>(&result.method.spec)) {
      result.certificate = certify_method(vi->method, vi->restricted, problem.vi.mu(),
                                          problem.vi.lip(), vi->params);
      if (result.certificate.feasible) opts.potential = potential_for(result.certificate);
      if (problem.objective) opts.objective = &*problem.objective;
      result.trace = run(problem.vi, *vi, problem.x0, stop, opts);
    } else {
      const auto& os = std::get<OptMethodSpec>(result.method.spec);
      const SmoothObjective& f = *problem.objective;
      result.certificate = certify_opt(f.mu(), f.lip(), os.params);
      opts.potential = PotentialSpec{PotentialKind::Energy, 0.0, os.params.c};
      result.trace = run(f, os, problem.x0, stop, opts);
    }
  } catch (const DivergenceError& e) {
    result.trace = e.trace();
    result.diverged = true;
    result.error = e.what();
  }
  result.trace.method = result.method.name;
  for (const auto& [k, v] : problem.metadata) result.trace.metadata[k] = v;

  bool has_potential = !result.trace.records.empty();
  for (const auto& r : result.trace.records) has_potential = has_potential && r.potential.has_value();
  if (result.certificate.feasible && has_potential) {
    result.contraction = check_contraction(result.trace, result.certificate);
  }
  result.iterations_to_tol = first_stay_below(result.trace, problem.kind == "quadratic", summary_tol);
  return result;
}

std::vector<MethodRun> run_experiment(const ExperimentConfig& config, const PreparedProblem& problem,
                                      unsigned jobs) {
  config.validate();
  const std::size_t count = config.methods.size();
  std::vector<std::optional<MethodRun>> slots(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        slots[i] = run_method(config.methods[i], problem, config.output, config.summary_tol);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(count)));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  std::vector<MethodRun> runs;
  for (std::size_t i = 0; i < count; ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    runs.push_back(std::move(*slots[i]));
  }
  return runs;
}

std::string summary_merit_name(const PreparedProblem& problem) {
  if (problem.kind == "quadratic") return "distance";
  if (problem.objective) return "gradient-norm";
  return problem.vi.set().is_whole_space() ? "operator-norm" : "complementarity";
}

void write_summary(std::ostream& out, const std::vector<MethodRun>& runs, double summary_tol,
                   const std::string& merit_name) {
  std::ostringstream tol;
  tol << summary_tol;
  out << "# iterations to " << merit_name << " <= " << tol.str() << '\n';
  out << std::left << std::setw(18) << "label" << std::setw(17) << "method" << std::setw(13)
      << "variant" << std::setw(12) << "certificate" << std::setw(10) << "iters" << std::setw(14)
      << "final_primary" << std::setw(14) << "final_aux" << std::setw(12) << "terminated"
      << "max_violation" << '\n';
  for (const auto& r : runs) {
    std::ostringstream prim, aux, viol;
    prim << std::setprecision(4) << (r.trace.records.empty() ? NAN : r.trace.records.back().merit_primary);
    aux << std::setprecision(4) << (r.trace.records.empty() ? NAN : r.trace.records.back().merit_aux);
    if (r.contraction) {
      viol << std::setprecision(3) << r.contraction->max_violation;
      if (!r.contraction->ok()) viol << " VIOLATED";
    } else {
      viol << '-';
    }
    const bool opt = std::holds_alternative<OptMethodSpec>(r.method.spec);
    out << std::left << std::setw(18) << r.method.label << std::setw(17) << r.method.name
        << std::setw(13) << (opt ? "-" : (r.method.restricted ? "restricted" : "unrestricted"))
        << std::setw(12) << (r.certificate.feasible ? "feasible" : "infeasible") << std::setw(10)
        << (r.iterations_to_tol ? std::to_string(*r.iterations_to_tol) : std::string("-"))
        << std::setw(14) << prim.str() << std::setw(14) << aux.str() << std::setw(12)
        << to_string(r.trace.terminated_by) << viol.str() << '\n';
  }
}

void write_traces(const OutputConfig& output, const std::vector<MethodRun>& runs) {
  namespace fs = std::filesystem;
  fs::create_directories(output.directory);
  for (const auto& r : runs) {
    for (const auto& format : output.formats) {
      const fs::path path = fs::path(output.directory) / (r.method.label + "." + format);
      std::ofstream out(path);
      if (!out) throw std::runtime_error("cannot write " + path.string());
      if (format == "csv") {
        write_csv(out, r.trace);
      } else {
        write_jsonl(out, r.trace);
      }
    }
  }
}

}  // namespace viaccel
