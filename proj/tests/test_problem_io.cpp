#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <sstream>

#include "viaccel/generators.hpp"
#include "viaccel/problem_io.hpp"

namespace viaccel {
namespace {

ProblemFile round_trip(const ProblemFile& f) {
  std::stringstream ss;
  write_problem_file(ss, f);
  return read_problem_file(ss);
}

TEST(FormatDouble, ParsesBackBitExact) {
  for (double x : {0.1, 1.0 / 3.0, -2.5e-300, 6.02214076e23, std::numeric_limits<double>::denorm_min(),
                   std::numeric_limits<double>::max(), 0.0}) {
    EXPECT_EQ(parse_double(format_double(x)), x);
  }
}

TEST(ParseDouble, RejectsJunk) {
  EXPECT_THROW(parse_double("1.0x"), FormatError);
  EXPECT_THROW(parse_double(""), FormatError);
  EXPECT_THROW(parse_double("nan"), FormatError);
  EXPECT_THROW(parse_double("inf"), FormatError);
}

TEST(ProblemFile, RoundTripIsBitExactForEveryKind) {
  const std::vector<ProblemFile> files{
      describe(gen_linear_vi(6, 1, 1e-2, false), 1, 1e-2, false),
      describe(gen_linear_vi(6, 2, 1e-2, true), 2, 1e-2, true),
      describe(gen_quadratic(5, 3, 0.01), 3, 0.01),
      describe(gen_logistic(4, 7, 1e-3, 4), 4),
      describe(gen_bilinear_saddle(2, 3, 5, 0.1, 0.2), 5),
  };
  for (const auto& f : files) {
    const ProblemFile back = round_trip(f);
    EXPECT_EQ(back, f) << f.kind;
    std::stringstream a, b;
    write_problem_file(a, f);
    write_problem_file(b, back);
    EXPECT_EQ(a.str(), b.str());
  }
}

TEST(ProblemFile, HeaderAndKeysPresent) {
  std::stringstream ss;
  write_problem_file(ss, describe(gen_quadratic(3, 1, 0.1), 1, 0.1));
  std::string line;
  std::getline(ss, line);
  EXPECT_EQ(line, "vi-accel-problem v1");
  const std::string text = ss.str();
  for (const char* key : {"\nkind=", "\nn=", "\nseed=", "\nmu=", "\nlip="}) {
    EXPECT_NE(text.find(key), std::string::npos) << key;
  }
}

TEST(ProblemFile, InstantiateReproducesTheInstance) {
  const LinearVi g = gen_linear_vi(8, 3, 1e-2, true);
  const LoadedProblem loaded = instantiate(round_trip(describe(g, 3, 1e-2, true)));
  EXPECT_EQ(loaded.kind, "linear-vi");
  EXPECT_EQ(loaded.vi.mu(), g.problem.mu());
  EXPECT_EQ(loaded.vi.lip(), g.problem.lip());
  EXPECT_EQ(*loaded.vi.solution(), *g.problem.solution());
  const Vector z(8, 0.3);
  EXPECT_EQ(loaded.vi.evaluate(z), g.problem.evaluate(z));
  EXPECT_EQ(loaded.vi.set().kind(), SetKind::NonnegativeOrthant);
}

TEST(ProblemFile, LogisticInstantiatesObjective) {
  const Logistic g = gen_logistic(4, 9, 1e-2, 2);
  const LoadedProblem loaded = instantiate(round_trip(describe(g, 2)));
  ASSERT_TRUE(loaded.objective.has_value());
  const Vector x{0.1, -0.2, 0.3, 0.4};
  EXPECT_EQ(loaded.objective->value(x), g.objective.value(x));
  EXPECT_EQ(loaded.objective->gradient(x), g.objective.gradient(x));
}

TEST(ProblemFile, MalformedInputRejected) {
  std::stringstream bad_header("not-a-problem\n");
  EXPECT_THROW(read_problem_file(bad_header), FormatError);

  std::stringstream ss;
  write_problem_file(ss, describe(gen_quadratic(3, 1, 0.1), 1, 0.1));
  std::string text = ss.str();
  const auto pos = text.find("\nmu=");
  std::stringstream broken(text.substr(0, pos) + "\nmu=abc" + text.substr(text.find('\n', pos + 1)));
  EXPECT_THROW(read_problem_file(broken), FormatError);

  std::stringstream truncated(text.substr(0, text.size() / 2));
  EXPECT_THROW(read_problem_file(truncated), FormatError);
}

}  // namespace
}  // namespace viaccel
