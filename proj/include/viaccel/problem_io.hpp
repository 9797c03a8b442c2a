#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "viaccel/generators.hpp"
#include "viaccel/problem.hpp"

namespace viaccel {

// In-memory image of a problem file (format documented in docs/formats.md).
struct ProblemFile {
  std::string kind;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  double mu = 0.0;
  double lip = 0.0;
  std::map<std::string, std::string> attributes;
  std::map<std::string, Vector> vectors;
  std::map<std::string, Matrix> matrices;

  bool operator==(const ProblemFile&) const = default;

  const std::string& attribute(const std::string& key) const;
  const Vector& vector(const std::string& name) const;
  const Matrix& matrix(const std::string& name) const;
};

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// 17 significant digits; parses back to the identical double.
std::string format_double(double x);
// Whole-string parse; throws FormatError on junk or non-finite values.
double parse_double(std::string_view text);

void write_problem_file(std::ostream& out, const ProblemFile& file);
ProblemFile read_problem_file(std::istream& in);
void save_problem_file(const std::filesystem::path& path, const ProblemFile& file);
ProblemFile load_problem_file(const std::filesystem::path& path);

ProblemFile describe(const LinearVi& p, std::uint64_t seed, double target_sigma, bool constrained);
ProblemFile describe(const Quadratic& p, std::uint64_t seed, double target_sigma);
ProblemFile describe(const Logistic& p, std::uint64_t seed);
ProblemFile describe(const BilinearSaddle& p, std::uint64_t seed);

// A loaded instance. Smooth kinds carry the objective and its gradient VI.
struct LoadedProblem {
  std::string kind;
  MonotoneProblem vi;
  std::optional<SmoothObjective> objective;
};

LoadedProblem instantiate(const ProblemFile& file);

}  // namespace viaccel
