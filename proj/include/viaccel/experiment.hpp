#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "viaccel/certificate.hpp"
#include "viaccel/config.hpp"
#include "viaccel/contraction.hpp"
#include "viaccel/problem_io.hpp"
#include "viaccel/run.hpp"

namespace viaccel {

struct PreparedProblem {
  std::string kind;
  MonotoneProblem vi;
  // Smooth kinds; logistic objectives carry the reference optimum.
  std::optional<SmoothObjective> objective;
  Vector x0;
  // Reference-run details, copied into every trace.
  std::map<std::string, std::string> metadata;
};

// Generates (or loads) the configured problem. The file image is returned
// through `image` when requested.
PreparedProblem prepare_problem(const ProblemConfig& config, ProblemFile* image = nullptr);

ProblemFile generate_problem_file(const ProblemConfig& config);

struct ResolvedMethod {
  std::string label;
  std::string name;
  bool restricted = false;
  std::variant<ViMethodSpec, OptMethodSpec> spec;
};

// Applies the preset and variant rules. Throws ConfigError when a table
// preset does not exist for the problem kind or explicit values are missing.
ResolvedMethod resolve_method(const MethodConfig& config, const PreparedProblem& problem);

struct MethodRun {
  ResolvedMethod method;
  RateCertificate certificate;
  IterateTrace trace;
  bool diverged = false;
  std::optional<ContractionReport> contraction;
  // First k from which the summary merit stays <= summary_tol.
  std::optional<std::size_t> iterations_to_tol;
  std::string error;

  // Feasible certificate with a failed contraction check.
  bool violates_certificate() const {
    return certificate.feasible && contraction && !contraction->ok();
  }
};

MethodRun run_method(const MethodConfig& config, const PreparedProblem& problem,
                     const OutputConfig& output, double summary_tol);

// Runs every method, up to `jobs` at a time; results keep the config order.
std::vector<MethodRun> run_experiment(const ExperimentConfig& config, const PreparedProblem& problem,
                                      unsigned jobs = 1);

// Name of the quantity behind iterations_to_tol: the distance ||x - x*|| for
// quadratics, merit_primary otherwise.
std::string summary_merit_name(const PreparedProblem& problem);

void write_summary(std::ostream& out, const std::vector<MethodRun>& runs, double summary_tol,
                   const std::string& merit_name);

// One file per method and format: <directory>/<label>.<format>.
void write_traces(const OutputConfig& output, const std::vector<MethodRun>& runs);

}  // namespace viaccel
