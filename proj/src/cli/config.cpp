#include "viaccel/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <string_view>

#include "viaccel/params.hpp"
#include "viaccel/problem_io.hpp"

namespace viaccel {
namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

class LineError {
 public:
  explicit LineError(std::size_t line) : line_(line) {}
  [[noreturn]] void fail(const std::string& what) const {
    throw ConfigError("line " + std::to_string(line_) + ": " + what);
  }

 private:
  std::size_t line_;
};

std::uint64_t to_uint(std::string_view v, const LineError& at) {
  std::uint64_t out = 0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size()) at.fail("expected an unsigned integer");
  return out;
}

double to_double(std::string_view v, const LineError& at) {
  try {
    return parse_double(v);
  } catch (const FormatError&) {
    at.fail("expected a finite number");
  }
}

bool to_bool(std::string_view v, const LineError& at) {
  if (v == "true") return true;
  if (v == "false") return false;
  at.fail("expected true or false");
}

std::vector<std::string> split_list(std::string_view v) {
  std::vector<std::string> out;
  while (!v.empty()) {
    const auto comma = v.find(',');
    out.emplace_back(trim(v.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    v.remove_prefix(comma + 1);
  }
  return out;
}

void set_problem(ProblemConfig& p, std::string_view key, std::string_view v, const LineError& at) {
  if (key == "kind") p.kind = v;
  else if (key == "n") p.n = to_uint(v, at);
  else if (key == "seed") p.seed = to_uint(v, at);
  else if (key == "sigma") p.sigma = to_double(v, at);
  else if (key == "constrained") p.constrained = to_bool(v, at);
  else if (key == "samples") p.samples = to_uint(v, at);
  else if (key == "lambda") p.lambda = to_double(v, at);
  else if (key == "ny") p.ny = to_uint(v, at);
  else if (key == "mu_x") p.mu_x = to_double(v, at);
  else if (key == "mu_y") p.mu_y = to_double(v, at);
  else if (key == "file") p.file = v;
  else if (key == "initial") p.initial = v;
  else at.fail("unknown key problem." + std::string(key));
}

void set_method(MethodConfig& m, std::string_view key, std::string_view v, const LineError& at) {
  if (key == "name") m.name = v;
  else if (key == "params") m.params = v;
  else if (key == "alpha") m.alpha = to_double(v, at);
  else if (key == "beta") m.beta = to_double(v, at);
  else if (key == "gamma") m.gamma = to_double(v, at);
  else if (key == "eta") m.eta = to_double(v, at);
  else if (key == "tau") m.tau = to_double(v, at);
  else if (key == "theta") m.theta = to_double(v, at);
  else if (key == "c") m.c = to_double(v, at);
  else if (key == "delta") m.delta = to_double(v, at);
  else if (key == "variant") m.variant = v;
  else if (key == "y_rule") m.y_rule = v;
  else if (key == "max_iter") m.max_iter = to_uint(v, at);
  else if (key == "residual_tol") m.residual_tol = to_double(v, at);
  else if (key.size() == 2 && key[0] == 't' && key[1] >= '1' && key[1] <= '9') {
    m.t[static_cast<std::size_t>(key[1] - '1')] = to_double(v, at);
  } else {
    at.fail("unknown method key '" + std::string(key) + "'");
  }
}

void put(std::ostream& out, const std::string& key, const std::string& value) {
  out << key << " = " << value << '\n';
}

void put(std::ostream& out, const std::string& key, const std::optional<double>& value) {
  if (value) put(out, key, format_double(*value));
}

}  // namespace

void ExperimentConfig::validate() const {
  static const std::set<std::string> kinds{"linear-vi", "quadratic", "logistic", "bilinear-saddle"};
  if (problem.file.empty() && !kinds.count(problem.kind)) {
    throw ConfigError("unknown problem kind '" + problem.kind + "'");
  }
  if (problem.file.empty() && problem.n == 0) throw ConfigError("problem.n must be positive");
  if (problem.initial != "ones" && problem.initial != "zeros") {
    throw ConfigError("problem.initial must be ones or zeros");
  }
  if (methods.empty()) throw ConfigError("at least one method is required");
  std::set<std::string> labels;
  for (const auto& m : methods) {
    if (m.label.empty()) throw ConfigError("method label must not be empty");
    if (!labels.insert(m.label).second) throw ConfigError("duplicate method label '" + m.label + "'");
    if (m.name != "opt-extra-point") {
      try {
        parse_vi_method(m.name);
      } catch (const std::invalid_argument&) {
        throw ConfigError("unknown method name '" + m.name + "'");
      }
    }
    if (m.params != "paper-default" && m.params != "table" && m.params != "explicit") {
      throw ConfigError("method." + m.label + ".params must be paper-default, table or explicit");
    }
    if (m.variant != "auto" && m.variant != "restricted" && m.variant != "unrestricted") {
      throw ConfigError("method." + m.label + ".variant must be auto, restricted or unrestricted");
    }
    try {
      parse_y_rule(m.y_rule);
    } catch (const std::invalid_argument&) {
      throw ConfigError("unknown y rule '" + m.y_rule + "'");
    }
  }
  if (output.thinning == 0) throw ConfigError("output.thinning must be positive");
  for (const auto& f : output.formats) {
    if (f != "csv" && f != "jsonl") throw ConfigError("unknown output format '" + f + "'");
  }
  if (!(summary_tol > 0.0)) throw ConfigError("summary.tol must be positive");
}

ExperimentConfig parse_config(std::istream& in) {
  ExperimentConfig cfg;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const LineError at(line_no);
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) at.fail("expected key = value");
    const std::string_view key = trim(line.substr(0, eq));
    const std::string_view value = trim(line.substr(eq + 1));
    if (key.starts_with("problem.")) {
      set_problem(cfg.problem, key.substr(8), value, at);
    } else if (key.starts_with("method.")) {
      const std::string_view rest = key.substr(7);
      const auto dot = rest.rfind('.');
      if (dot == std::string_view::npos || dot == 0) at.fail("expected method.<label>.<field>");
      const std::string label(rest.substr(0, dot));
      auto it = std::find_if(cfg.methods.begin(), cfg.methods.end(),
                             [&](const MethodConfig& m) { return m.label == label; });
      if (it == cfg.methods.end()) {
        cfg.methods.push_back(MethodConfig{});
        cfg.methods.back().label = label;
        it = std::prev(cfg.methods.end());
      }
      set_method(*it, rest.substr(dot + 1), value, at);
    } else if (key == "output.directory") {
      cfg.output.directory = value;
    } else if (key == "output.formats") {
      cfg.output.formats = split_list(value);
    } else if (key == "output.thinning") {
      cfg.output.thinning = to_uint(value, at);
    } else if (key == "summary.tol") {
      cfg.summary_tol = to_double(value, at);
    } else {
      at.fail("unknown key '" + std::string(key) + "'");
    }
  }
  cfg.validate();
  return cfg;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  return parse_config(in);
}

void write_config(std::ostream& out, const ExperimentConfig& cfg) {
  const auto& p = cfg.problem;
  put(out, "problem.kind", p.kind);
  put(out, "problem.n", std::to_string(p.n));
  put(out, "problem.seed", std::to_string(p.seed));
  put(out, "problem.sigma", format_double(p.sigma));
  put(out, "problem.constrained", p.constrained ? "true" : "false");
  put(out, "problem.samples", std::to_string(p.samples));
  put(out, "problem.lambda", format_double(p.lambda));
  put(out, "problem.ny", std::to_string(p.ny));
  put(out, "problem.mu_x", format_double(p.mu_x));
  put(out, "problem.mu_y", format_double(p.mu_y));
  if (!p.file.empty()) put(out, "problem.file", p.file);
  put(out, "problem.initial", p.initial);
  for (const auto& m : cfg.methods) {
    const std::string k = "method." + m.label + ".";
    put(out, k + "name", m.name);
    put(out, k + "params", m.params);
    put(out, k + "alpha", m.alpha);
    put(out, k + "beta", m.beta);
    put(out, k + "gamma", m.gamma);
    put(out, k + "eta", m.eta);
    put(out, k + "tau", m.tau);
    for (std::size_t i = 0; i < m.t.size(); ++i) put(out, k + "t" + std::to_string(i + 1), m.t[i]);
    put(out, k + "theta", m.theta);
    put(out, k + "c", m.c);
    put(out, k + "delta", m.delta);
    put(out, k + "variant", m.variant);
    put(out, k + "y_rule", m.y_rule);
    put(out, k + "max_iter", std::to_string(m.max_iter));
    put(out, k + "residual_tol", format_double(m.residual_tol));
  }
  put(out, "output.directory", cfg.output.directory);
  std::string formats;
  for (std::size_t i = 0; i < cfg.output.formats.size(); ++i) {
    formats += (i ? "," : "") + cfg.output.formats[i];
  }
  put(out, "output.formats", formats);
  put(out, "output.thinning", std::to_string(cfg.output.thinning));
  put(out, "summary.tol", format_double(cfg.summary_tol));
}

}  // namespace viaccel
