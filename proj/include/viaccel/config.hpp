#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace viaccel {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ProblemConfig {
  // linear-vi, quadratic, logistic or bilinear-saddle.
  std::string kind = "linear-vi";
  std::size_t n = 20;
  std::uint64_t seed = 1;
  double sigma = 1e-2;
  bool constrained = false;
  std::size_t samples = 100;
  double lambda = 1e-3;
  // Second block size of bilinear-saddle (0 means n).
  std::size_t ny = 0;
  double mu_x = 0.1;
  double mu_y = 0.1;
  // When set, the problem is loaded from this file and the fields above are ignored.
  std::string file;
  // "ones" or "zeros".
  std::string initial = "ones";

  bool operator==(const ProblemConfig&) const = default;
};

struct MethodConfig {
  std::string label;
  // A ViMethod name or "opt-extra-point".
  std::string name;
  // "paper-default", "table" or "explicit".
  std::string params = "paper-default";
  std::optional<double> alpha, beta, gamma, eta, tau;
  std::array<std::optional<double>, 9> t{};
  std::optional<double> theta, c, delta;
  // "auto" (restricted iff the set is not the whole space), "restricted", "unrestricted".
  std::string variant = "auto";
  std::string y_rule = "y-equals-p";
  std::size_t max_iter = 5000;
  double residual_tol = 1e-10;

  bool operator==(const MethodConfig&) const = default;
};

struct OutputConfig {
  std::string directory = ".";
  // Subset of {csv, jsonl}.
  std::vector<std::string> formats{"csv"};
  std::size_t thinning = 1;

  bool operator==(const OutputConfig&) const = default;
};

struct ExperimentConfig {
  ProblemConfig problem;
  std::vector<MethodConfig> methods;
  OutputConfig output;
  // Merit threshold for the iterations-to-tolerance column.
  double summary_tol = 1e-6;

  bool operator==(const ExperimentConfig&) const = default;

  // Throws ConfigError on an empty method list, duplicate labels, unknown
  // names, formats or variants, or zero dimension/thinning.
  void validate() const;
};

// Flat "key = value" lines, '#' comments. Keys:
//   problem.{kind,n,seed,sigma,constrained,samples,lambda,ny,mu_x,mu_y,file,initial}
//   method.<label>.{name,params,alpha,beta,gamma,eta,tau,t1..t9,theta,c,delta,
//                   variant,y_rule,max_iter,residual_tol}
//   output.{directory,formats,thinning}
//   summary.tol
// Methods keep the order of their first key. Throws ConfigError with the line number.
ExperimentConfig parse_config(std::istream& in);
ExperimentConfig load_config(const std::string& path);
void write_config(std::ostream& out, const ExperimentConfig& config);

}  // namespace viaccel
