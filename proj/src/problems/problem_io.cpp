#include "viaccel/problem_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace viaccel {
namespace {

constexpr std::string_view kHeader = "vi-accel-problem v1";

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

template <class T>
T parse_integer(std::string_view text, const char* what) {
  T value{};
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw FormatError(std::string("invalid ") + what + " '" + std::string(text) + "'");
  }
  return value;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  std::optional<std::string> next() {
    std::string line;
    while (std::getline(in_, line)) {
      ++number_;
      if (!trim(line).empty()) return std::string(trim(line));
    }
    return std::nullopt;
  }

  std::string require(const char* context) {
    auto line = next();
    if (!line) throw fail(std::string("unexpected end of file in ") + context);
    return *line;
  }

  FormatError fail(const std::string& message) const {
    return FormatError("line " + std::to_string(number_) + ": " + message);
  }

 private:
  std::istream& in_;
  std::size_t number_ = 0;
};

std::vector<double> read_values(LineReader& reader, std::size_t count, const std::string& block) {
  std::vector<double> values;
  values.reserve(count);
  while (values.size() < count) {
    const std::string line = reader.require(block.c_str());
    for (auto token : split_ws(line)) {
      try {
        values.push_back(parse_double(token));
      } catch (const FormatError& e) {
        throw reader.fail(e.what());
      }
    }
    if (values.size() > count) throw reader.fail("too many values in block " + block);
  }
  return values;
}

void write_row(std::ostream& out, const double* v, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    if (i) out << ' ';
    out << format_double(v[i]);
  }
  out << '\n';
}

}  // namespace

const std::string& ProblemFile::attribute(const std::string& key) const {
  auto it = attributes.find(key);
  if (it == attributes.end()) throw FormatError("missing attribute '" + key + "'");
  return it->second;
}

const Vector& ProblemFile::vector(const std::string& name) const {
  auto it = vectors.find(name);
  if (it == vectors.end()) throw FormatError("missing vector block '" + name + "'");
  return it->second;
}

const Matrix& ProblemFile::matrix(const std::string& name) const {
  auto it = matrices.find(name);
  if (it == matrices.end()) throw FormatError("missing matrix block '" + name + "'");
  return it->second;
}

std::string format_double(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
  if (ec != std::errc()) throw FormatError("cannot format value");
  return std::string(buf, ptr);
}

double parse_double(std::string_view text) {
  text = trim(text);
  double value = 0.0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw FormatError("invalid number '" + std::string(text) + "'");
  }
  if (!std::isfinite(value)) throw FormatError("non-finite number '" + std::string(text) + "'");
  return value;
}

void write_problem_file(std::ostream& out, const ProblemFile& file) {
  out << kHeader << '\n';
  out << "kind=" << file.kind << '\n';
  out << "n=" << file.n << '\n';
  out << "seed=" << file.seed << '\n';
  out << "mu=" << format_double(file.mu) << '\n';
  out << "lip=" << format_double(file.lip) << '\n';
  for (const auto& [k, v] : file.attributes) out << k << '=' << v << '\n';
  for (const auto& [name, v] : file.vectors) {
    out << "vector " << name << ' ' << v.size() << '\n';
    write_row(out, v.data(), v.size());
  }
  for (const auto& [name, m] : file.matrices) {
    out << "matrix " << name << ' ' << m.rows() << ' ' << m.cols() << '\n';
    for (std::size_t r = 0; r < m.rows(); ++r) write_row(out, m.data() + r * m.cols(), m.cols());
  }
  out << "end\n";
}

ProblemFile read_problem_file(std::istream& in) {
  LineReader reader(in);
  if (reader.require("header") != kHeader) throw reader.fail("expected header 'vi-accel-problem v1'");

  ProblemFile file;
  bool seen_kind = false, seen_n = false, seen_seed = false, seen_mu = false, seen_lip = false;
  for (;;) {
    const std::string line = reader.require("problem body");
    if (line == "end") break;
    const auto tokens = split_ws(line);
    if (tokens.size() >= 3 && tokens[0] == "vector") {
      if (tokens.size() != 3) throw reader.fail("vector header is 'vector NAME SIZE'");
      const std::string name(tokens[1]);
      const auto size = parse_integer<std::size_t>(tokens[2], "vector size");
      if (size == 0) throw reader.fail("empty vector block " + name);
      auto values = read_values(reader, size, name);
      if (!file.vectors.emplace(name, Vector(std::move(values))).second) {
        throw reader.fail("duplicate block " + name);
      }
      continue;
    }
    if (tokens.size() >= 4 && tokens[0] == "matrix") {
      if (tokens.size() != 4) throw reader.fail("matrix header is 'matrix NAME ROWS COLS'");
      const std::string name(tokens[1]);
      const auto rows = parse_integer<std::size_t>(tokens[2], "matrix rows");
      const auto cols = parse_integer<std::size_t>(tokens[3], "matrix cols");
      if (rows == 0 || cols == 0) throw reader.fail("empty matrix block " + name);
      auto values = read_values(reader, rows * cols, name);
      if (!file.matrices.emplace(name, Matrix(rows, cols, std::move(values))).second) {
        throw reader.fail("duplicate block " + name);
      }
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos || eq == 0) throw reader.fail("expected key=value, got '" + line + "'");
    const std::string key(trim(std::string_view(line).substr(0, eq)));
    const std::string value(trim(std::string_view(line).substr(eq + 1)));
    try {
      if (key == "kind") {
        file.kind = value;
        seen_kind = true;
      } else if (key == "n") {
        file.n = parse_integer<std::size_t>(value, "n");
        seen_n = true;
      } else if (key == "seed") {
        file.seed = parse_integer<std::uint64_t>(value, "seed");
        seen_seed = true;
      } else if (key == "mu") {
        file.mu = parse_double(value);
        seen_mu = true;
      } else if (key == "lip") {
        file.lip = parse_double(value);
        seen_lip = true;
      } else if (!file.attributes.emplace(key, value).second) {
        throw FormatError("duplicate attribute '" + key + "'");
      }
    } catch (const FormatError& e) {
      throw reader.fail(e.what());
    }
  }
  if (!(seen_kind && seen_n && seen_seed && seen_mu && seen_lip)) {
    throw FormatError("problem file lacks one of kind, n, seed, mu, lip");
  }
  if (reader.next()) throw reader.fail("content after 'end'");
  return file;
}

void save_problem_file(const std::filesystem::path& path, const ProblemFile& file) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  write_problem_file(out, file);
  if (!out) throw std::runtime_error("failed writing '" + path.string() + "'");
}

ProblemFile load_problem_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
  return read_problem_file(in);
}

ProblemFile describe(const LinearVi& p, std::uint64_t seed, double target_sigma, bool constrained) {
  ProblemFile f;
  f.kind = "linear-vi";
  f.n = p.problem.dimension();
  f.seed = seed;
  f.mu = p.problem.mu();
  f.lip = p.problem.lip();
  f.attributes["constrained"] = constrained ? "1" : "0";
  f.attributes["target_sigma"] = format_double(target_sigma);
  f.vectors.emplace("q", p.spec.q);
  f.vectors.emplace("q_diag", p.spec.q_diag);
  f.vectors.emplace("solution", *p.problem.solution());
  f.matrices.emplace("a_skew", p.spec.a_skew);
  f.matrices.emplace("m", p.spec.m);
  return f;
}

ProblemFile describe(const Quadratic& p, std::uint64_t seed, double target_sigma) {
  ProblemFile f;
  f.kind = "quadratic";
  f.n = p.objective.dimension();
  f.seed = seed;
  f.mu = p.objective.mu();
  f.lip = p.objective.lip();
  f.attributes["target_sigma"] = format_double(target_sigma);
  f.vectors.emplace("q", p.spec.q);
  f.vectors.emplace("eigenvalues", p.spec.eigenvalues);
  f.matrices.emplace("m", p.spec.m);
  f.matrices.emplace("basis", p.spec.basis);
  return f;
}

ProblemFile describe(const Logistic& p, std::uint64_t seed) {
  ProblemFile f;
  f.kind = "logistic";
  f.n = p.objective.dimension();
  f.seed = seed;
  f.mu = p.objective.mu();
  f.lip = p.objective.lip();
  f.attributes["lambda"] = format_double(p.spec.lambda);
  f.attributes["n_samples"] = std::to_string(p.spec.samples.size());
  Matrix a(p.spec.samples.size(), f.n);
  for (std::size_t i = 0; i < p.spec.samples.size(); ++i) {
    for (std::size_t j = 0; j < f.n; ++j) a(i, j) = p.spec.samples[i][j];
  }
  f.matrices.emplace("samples", std::move(a));
  return f;
}

ProblemFile describe(const BilinearSaddle& p, std::uint64_t seed) {
  ProblemFile f;
  f.kind = "bilinear-saddle";
  f.n = p.problem.dimension();
  f.seed = seed;
  f.mu = p.problem.mu();
  f.lip = p.problem.lip();
  f.attributes["mu_x"] = format_double(p.mu_x);
  f.attributes["mu_y"] = format_double(p.mu_y);
  f.matrices.emplace("b", p.b);
  return f;
}

LoadedProblem instantiate(const ProblemFile& file) {
  auto check_n = [&](std::size_t n, const char* what) {
    if (n != file.n) throw FormatError(std::string(what) + " does not match n");
  };
  if (file.kind == "linear-vi") {
    const bool constrained = file.attribute("constrained") == "1";
    LinearOperatorSpec spec{file.matrix("m"), file.vector("q"), file.vector("q_diag"),
                            file.matrix("a_skew")};
    check_n(spec.q.size(), "vector q");
    validate(spec);
    FeasibleSet set = constrained ? FeasibleSet::nonnegative_orthant() : FeasibleSet::whole_space();
    auto solution = file.vectors.count("solution") ? std::optional<Vector>(file.vector("solution"))
                                                   : std::nullopt;
    return LoadedProblem{file.kind,
                         make_linear_problem(spec, std::move(set), file.mu, file.lip,
                                             std::move(solution), false,
                                             constrained ? "linear-vi-lcp" : "linear-vi"),
                         std::nullopt};
  }
  if (file.kind == "quadratic") {
    check_n(file.vector("q").size(), "vector q");
    SmoothObjective obj =
        make_quadratic_objective(file.matrix("m"), file.vector("q"), file.mu, file.lip, "quadratic");
    MonotoneProblem vi = gradient_problem(obj);
    return LoadedProblem{file.kind, std::move(vi), std::move(obj)};
  }
  if (file.kind == "logistic") {
    const Matrix& a = file.matrix("samples");
    check_n(a.cols(), "samples matrix");
    LogisticSpec spec{{}, parse_double(file.attribute("lambda"))};
    for (std::size_t i = 0; i < a.rows(); ++i) {
      spec.samples.emplace_back(std::vector<double>(a.data() + i * a.cols(), a.data() + (i + 1) * a.cols()));
    }
    SmoothObjective obj = make_logistic_objective(spec, file.lip, "logistic");
    MonotoneProblem vi = gradient_problem(obj);
    return LoadedProblem{file.kind, std::move(vi), std::move(obj)};
  }
  if (file.kind == "bilinear-saddle") {
    const Matrix& b = file.matrix("b");
    check_n(b.rows() + b.cols(), "block sizes");
    LinearOperatorSpec spec =
        bilinear_operator(b, parse_double(file.attribute("mu_x")), parse_double(file.attribute("mu_y")));
    return LoadedProblem{file.kind,
                         make_linear_problem(spec, FeasibleSet::whole_space(), file.mu, file.lip,
                                             Vector(file.n), false, "bilinear-saddle"),
                         std::nullopt};
  }
  throw FormatError("unknown problem kind '" + file.kind + "'");
}

}  // namespace viaccel
