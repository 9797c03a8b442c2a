#include "viaccel/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include "viaccel/certificate.hpp"
#include "viaccel/config.hpp"
#include "viaccel/experiment.hpp"
#include "viaccel/generators.hpp"
#include "viaccel/presets.hpp"

namespace viaccel {
namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GenerateArgs {
  ProblemConfig problem;
  std::string out;
  std::size_t trials = 200;
};

struct CertifyArgs {
  std::string regime;
  double mu = 0.0;
  double lip = 0.0;
  std::string preset;
  std::optional<double> alpha, beta, gamma, eta, tau, theta, c, theta_override;
  std::array<std::optional<double>, 9> t{};
  double delta = 0.5;
  double gap = 1.0;
  double tol = 1e-6;
};

struct RunArgs {
  std::string config;
  std::string problem;
  std::string method;
  std::string methods;
  std::string preset = "paper-default";
  MethodConfig overrides;
  std::optional<std::size_t> max_iter;
  std::optional<double> residual_tol;
  std::string out_dir;
  std::string formats;
  std::optional<std::size_t> thinning;
  std::optional<double> summary_tol;
  std::string initial;
  unsigned jobs = 1;
  bool strict = false;
};

void add_param_options(CLI::App* app, MethodConfig& m) {
  app->add_option("--alpha", m.alpha, "Step size alpha");
  app->add_option("--beta", m.beta, "Extrapolation momentum beta");
  app->add_option("--gamma", m.gamma, "Momentum gamma");
  app->add_option("--eta", m.eta, "Extra-point step eta");
  app->add_option("--tau", m.tau, "Optimism tau");
  for (std::size_t i = 0; i < 9; ++i) {
    app->add_option("--t" + std::to_string(i + 1), m.t[i], "Optimization parameter t" + std::to_string(i + 1));
  }
  app->add_option("--theta", m.theta, "Optimization rate parameter theta");
  app->add_option("--c", m.c, "Energy constant C");
  app->add_option("--delta", m.delta, "Optimization default parameter delta");
  app->add_option("--variant", m.variant, "auto, restricted or unrestricted")->default_val("auto");
  app->add_option("--y-rule", m.y_rule, "y-equals-p or y-grad-step")->default_val("y-equals-p");
}

bool has_explicit(const MethodConfig& m) {
  bool any = m.alpha || m.beta || m.gamma || m.eta || m.tau || m.theta || m.c;
  for (const auto& t : m.t) any = any || t.has_value();
  return any;
}

int cmd_generate(const GenerateArgs& a, std::ostream& out) {
  ProblemFile image;
  const PreparedProblem prepared = prepare_problem(a.problem, &image);
  const std::string path =
      a.out.empty() ? a.problem.kind + "-n" + std::to_string(a.problem.n) + "-s" +
                          std::to_string(a.problem.seed) + ".problem"
                    : a.out;
  save_problem_file(path, image);
  const MonotoneProblem& p = prepared.vi;
  const ConstantEstimate est = estimate_constants(p, a.trials);
  out << "file = " << path << '\n';
  out << "kind = " << prepared.kind << '\n';
  out << "n = " << p.dimension() << '\n';
  out << "mu = " << format_double(p.mu()) << "   mu_hat = " << format_double(est.mu_hat) << '\n';
  out << "lip = " << format_double(p.lip()) << "   lip_hat = " << format_double(est.lip_hat) << '\n';
  out << "sigma = " << format_double(p.sigma()) << '\n';
  out << "kappa = " << format_double(p.kappa()) << '\n';
  return kExitOk;
}

int cmd_certify(const CertifyArgs& a, std::ostream& out) {
  if (!(a.mu > 0.0) || !(a.lip >= a.mu)) throw UsageError("--mu and --lip must satisfy 0 < mu <= lip");
  if (!(a.gap > 0.0) || !(a.tol > 0.0)) throw UsageError("--gap and --tol must be positive");
  Regime regime;
  try {
    regime = parse_regime(a.regime);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (!a.preset.empty() && a.preset != "paper-default") {
    throw UsageError("--preset must be paper-default");
  }
  RateCertificate cert;
  if (regime == Regime::Opt) {
    // Unset values come from the default choice for delta.
    if (!(a.delta > 0.0 && a.delta < 1.0)) throw UsageError("--delta must lie in (0, 1)");
    OptParams p = default_opt_params(a.mu, a.lip, a.delta);
    for (std::size_t i = 0; i < 9; ++i) {
      if (a.t[i]) p.t[i] = *a.t[i];
    }
    if (a.theta) p.theta = *a.theta;
    if (a.c) p.c = *a.c;
    cert = certify_opt(a.mu, a.lip, p);
  } else {
    ViParams p;
    if (!a.preset.empty()) {
      p = default_vi_params(regime, a.mu, a.lip);
    } else if (!a.alpha) {
      throw UsageError("--alpha is required without --preset");
    }
    if (a.alpha) p.alpha = *a.alpha;
    if (a.beta) p.beta = *a.beta;
    if (a.gamma) p.gamma = *a.gamma;
    if (a.eta) p.eta = *a.eta;
    if (a.tau) p.tau = *a.tau;
    switch (regime) {
      case Regime::ViUnrestricted:
        cert = certify_vi_unrestricted(a.mu, a.lip, p);
        break;
      case Regime::ViRestricted:
        cert = certify_vi_restricted(a.mu, a.lip, p);
        break;
      case Regime::Vanilla:
        cert = certify_vanilla(a.mu, a.lip, p);
        break;
      case Regime::Extragradient:
      case Regime::ExtragradientRestricted:
        cert = certify_extragradient(a.mu, a.lip, p, regime == Regime::ExtragradientRestricted);
        break;
      case Regime::Ogda:
        cert = certify_ogda(a.mu, a.lip, p);
        break;
      case Regime::Opt:
        break;
    }
  }
  if (a.theta_override && cert.feasible) {
    if (regime == Regime::Opt) throw UsageError("--theta-override does not apply to the opt regime");
    const double th = *a.theta_override;
    if (th >= cert.theta_lo && th < cert.theta_hi && cert.b <= th * (1.0 - (cert.a - th))) {
      cert.theta_default = th;
      cert.rate = 1.0 - (cert.a - th);
    } else {
      cert.feasible = false;
      cert.violated.push_back("theta-override");
    }
  }
  write_certificate(out, cert);
  if (!cert.feasible) return kExitInfeasible;
  out << "gap = " << format_double(a.gap) << '\n';
  out << "tol = " << format_double(a.tol) << '\n';
  out << "iteration_bound = " << iteration_bound(cert, a.gap, a.tol) << '\n';
  return kExitOk;
}

ExperimentConfig build_config(const RunArgs& a, bool single) {
  ExperimentConfig cfg;
  if (!a.config.empty()) {
    cfg = load_config(a.config);
    if (!a.problem.empty()) cfg.problem.file = a.problem;
  } else {
    if (a.problem.empty()) throw UsageError("--problem or --config is required");
    cfg.problem.file = a.problem;
    std::vector<std::string> names;
    if (single) {
      if (a.method.empty()) throw UsageError("--method is required");
      names.push_back(a.method);
    } else {
      if (a.methods.empty()) throw UsageError("--methods is required without --config");
      std::stringstream ss(a.methods);
      for (std::string n; std::getline(ss, n, ',');) {
        if (!n.empty()) names.push_back(n);
      }
    }
    for (const auto& n : names) {
      MethodConfig m = a.overrides;
      m.label = n;
      m.name = n;
      m.params = (a.preset == "paper-default" && has_explicit(a.overrides) && single) ? "explicit" : a.preset;
      if (m.params == "explicit" && !has_explicit(a.overrides)) {
        throw UsageError("--preset explicit needs parameter values");
      }
      cfg.methods.push_back(m);
    }
  }
  if (single && cfg.methods.size() != 1) throw UsageError("solve runs exactly one method");
  for (auto& m : cfg.methods) {
    if (a.max_iter) m.max_iter = *a.max_iter;
    if (a.residual_tol) m.residual_tol = *a.residual_tol;
  }
  if (!a.out_dir.empty()) cfg.output.directory = a.out_dir;
  if (!a.formats.empty()) {
    cfg.output.formats.clear();
    std::stringstream ss(a.formats);
    for (std::string f; std::getline(ss, f, ',');) cfg.output.formats.push_back(f);
  }
  if (a.thinning) cfg.output.thinning = *a.thinning;
  if (a.summary_tol) cfg.summary_tol = *a.summary_tol;
  if (!a.initial.empty()) cfg.problem.initial = a.initial;
  cfg.validate();
  return cfg;
}

int cmd_run(const RunArgs& a, bool single, std::ostream& out, std::ostream& err) {
  const ExperimentConfig cfg = build_config(a, single);
  const PreparedProblem problem = prepare_problem(cfg.problem);
  const auto runs = run_experiment(cfg, problem, a.jobs);
  write_traces(cfg.output, runs);
  write_summary(out, runs, cfg.summary_tol, summary_merit_name(problem));
  bool violated = false;
  bool diverged = false;
  for (const auto& r : runs) {
    violated = violated || r.violates_certificate();
    if (r.diverged) {
      diverged = true;
      err << r.method.label << ": " << r.error << '\n';
    }
  }
  if (violated) return kExitViolation;
  if (diverged && a.strict) return kExitViolation;
  return kExitOk;
}

void add_run_options(CLI::App* app, RunArgs& a) {
  app->add_option("--config", a.config, "Experiment config file");
  app->add_option("--problem", a.problem, "Problem file written by generate");
  app->add_option("--preset", a.preset, "paper-default, table or explicit")->default_val("paper-default");
  app->add_option("--max-iter", a.max_iter, "Iteration cap per method (default 5000)");
  app->add_option("--tol", a.residual_tol, "Stopping tolerance on the residual (default 1e-10)");
  app->add_option("--out-dir", a.out_dir, "Trace directory (default .)");
  app->add_option("--format", a.formats, "Comma list of csv, jsonl (default csv)");
  app->add_option("--thinning", a.thinning, "Keep every k-th record (default 1)");
  app->add_option("--summary-tol", a.summary_tol, "Merit threshold of the summary (default 1e-6)");
  app->add_option("--initial", a.initial, "Initial point: ones or zeros (default ones)");
  app->add_flag("--strict", a.strict, "Exit 4 on divergence as well");
  add_param_options(app, a.overrides);
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Extra-point first-order methods for strongly monotone VIs", "viaccel"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* g = app.add_subcommand("generate", "Generate a problem file");
  g->add_option("--kind", gen.problem.kind, "linear-vi, quadratic, logistic or bilinear-saddle")->required();
  g->add_option("--n", gen.problem.n, "Dimension (x block for bilinear-saddle)")->default_val(20);
  g->add_option("--seed", gen.problem.seed, "Seed")->default_val(1);
  g->add_option("--sigma", gen.problem.sigma, "Target mu/L in (0, 1]")->default_val(1e-2);
  g->add_flag("--constrained", gen.problem.constrained, "Nonnegative orthant (linear-vi)");
  g->add_option("--samples", gen.problem.samples, "Logistic sample count")->default_val(100);
  g->add_option("--lambda", gen.problem.lambda, "Logistic regularization")->default_val(1e-3);
  g->add_option("--ny", gen.problem.ny, "y block size for bilinear-saddle (default n)");
  g->add_option("--mu-x", gen.problem.mu_x, "bilinear-saddle x modulus")->default_val(0.1);
  g->add_option("--mu-y", gen.problem.mu_y, "bilinear-saddle y modulus")->default_val(0.1);
  g->add_option("--out", gen.out, "Output file");
  g->add_option("--trials", gen.trials, "Sample points for the constant estimates")->default_val(200);

  CertifyArgs cer;
  auto* c = app.add_subcommand("certify", "Check parameters against a rate certificate");
  c->add_option("--regime", cer.regime,
                "vi-unrestricted, vi-restricted, opt, vanilla, extragradient, "
                "extragradient-restricted or ogda")
      ->required();
  c->add_option("--mu", cer.mu, "Strong monotonicity modulus")->required();
  c->add_option("--lip", cer.lip, "Lipschitz constant")->required();
  c->add_option("--preset", cer.preset, "paper-default");
  c->add_option("--alpha", cer.alpha);
  c->add_option("--beta", cer.beta);
  c->add_option("--gamma", cer.gamma);
  c->add_option("--eta", cer.eta);
  c->add_option("--tau", cer.tau);
  for (std::size_t i = 0; i < 9; ++i) c->add_option("--t" + std::to_string(i + 1), cer.t[i]);
  c->add_option("--theta", cer.theta, "Opt rate parameter");
  c->add_option("--c", cer.c, "Opt energy constant");
  c->add_option("--delta", cer.delta, "Opt default parameter")->default_val(0.5);
  c->add_option("--theta-override", cer.theta_override, "Theta inside the certified interval");
  c->add_option("--gap", cer.gap, "Initial squared distance for the bound")->default_val(1.0);
  c->add_option("--tol", cer.tol, "Target for the bound")->default_val(1e-6);

  RunArgs solve_args;
  auto* s = app.add_subcommand("solve", "Run one method");
  s->add_option("--method", solve_args.method, "Method name");
  add_run_options(s, solve_args);

  RunArgs cmp_args;
  auto* m = app.add_subcommand("compare", "Run several methods on one problem");
  m->add_option("--methods", cmp_args.methods, "Comma list of method names");
  m->add_option("--jobs", cmp_args.jobs, "Concurrent runs")->default_val(1);
  add_run_options(m, cmp_args);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (g->parsed()) return cmd_generate(gen, out);
    if (c->parsed()) return cmd_certify(cer, out);
    if (s->parsed()) return cmd_run(solve_args, true, out, err);
    if (m->parsed()) return cmd_run(cmp_args, false, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitUsage;
}

}  // namespace viaccel
