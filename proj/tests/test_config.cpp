#include <gtest/gtest.h>

#include <sstream>

#include "viaccel/config.hpp"

namespace viaccel {
namespace {

ExperimentConfig parse(const std::string& text) {
  std::istringstream in(text);
  return parse_config(in);
}

const char* kSample = R"(# comparison
problem.kind = linear-vi
problem.n = 12
problem.seed = 7
problem.constrained = true

method.ep.name = extra-point
method.ep.params = table
method.eg.name = extragradient
method.eg.params = explicit
method.eg.alpha = 0.03
method.eg.eta = 0.03
method.eg.max_iter = 100
method.ep.t3 = 0.25
output.formats = csv, jsonl
output.thinning = 5
summary.tol = 1e-7
)";

TEST(ParseConfig, ReadsSample) {
  const ExperimentConfig c = parse(kSample);
  EXPECT_EQ(c.problem.kind, "linear-vi");
  EXPECT_EQ(c.problem.n, 12u);
  EXPECT_EQ(c.problem.seed, 7u);
  EXPECT_TRUE(c.problem.constrained);
  ASSERT_EQ(c.methods.size(), 2u);
  EXPECT_EQ(c.methods[0].label, "ep");
  EXPECT_EQ(c.methods[0].params, "table");
  EXPECT_EQ(*c.methods[0].t[2], 0.25);
  EXPECT_EQ(c.methods[1].label, "eg");
  EXPECT_EQ(*c.methods[1].alpha, 0.03);
  EXPECT_FALSE(c.methods[1].beta.has_value());
  EXPECT_EQ(c.methods[1].max_iter, 100u);
  EXPECT_EQ(c.output.formats, (std::vector<std::string>{"csv", "jsonl"}));
  EXPECT_EQ(c.output.thinning, 5u);
  EXPECT_EQ(c.summary_tol, 1e-7);
}

TEST(ParseConfig, RoundTripsThroughWriter) {
  ExperimentConfig c = parse(kSample);
  c.methods[1].alpha = 0.1 + 0.2;
  c.problem.sigma = 1.0 / 3.0;
  std::ostringstream out;
  write_config(out, c);
  EXPECT_EQ(parse(out.str()), c);
}

void expect_error_on_line(const std::string& text, const std::string& prefix) {
  try {
    parse(text);
    FAIL() << "no error for:\n" << text;
  } catch (const ConfigError& e) {
    EXPECT_EQ(std::string(e.what()).rfind(prefix, 0), 0u) << e.what();
  }
}

TEST(ParseConfig, ErrorsNameTheLine) {
  expect_error_on_line("problem.n = 3\nproblem.bogus = 1\n", "line 2:");
  expect_error_on_line("\n# c\nproblem.n = three\n", "line 3:");
  expect_error_on_line("method.a.name = vanilla\nmethod.a.alpha = nan\n", "line 2:");
  expect_error_on_line("problem.constrained = yes\n", "line 1:");
  expect_error_on_line("just words\n", "line 1:");
  expect_error_on_line("method.nolabel = 1\n", "line 1:");
}

TEST(ParseConfig, ValidatesWholeConfig) {
  EXPECT_THROW(parse("problem.n = 3\n"), ConfigError);
  EXPECT_THROW(parse("method.a.name = warp-drive\n"), ConfigError);
  EXPECT_THROW(parse("method.a.name = vanilla\noutput.thinning = 0\n"), ConfigError);
  EXPECT_THROW(parse("method.a.name = vanilla\noutput.formats = xml\n"), ConfigError);
  EXPECT_THROW(parse("method.a.name = vanilla\nmethod.a.variant = sideways\n"), ConfigError);
  EXPECT_THROW(parse("method.a.name = vanilla\nproblem.kind = cubic\n"), ConfigError);
  EXPECT_NO_THROW(parse("method.a.name = vanilla\n"));
}

TEST(LoadConfig, MissingFile) { EXPECT_THROW(load_config("/nonexistent/x.cfg"), ConfigError); }

}  // namespace
}  // namespace viaccel
