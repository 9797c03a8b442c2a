#include <gtest/gtest.h>

#include <json.hpp>
#include <sstream>

#include "viaccel/problem_io.hpp"
#include "viaccel/trace.hpp"

namespace viaccel {
namespace {

IterateTrace sample() {
  IterateTrace t;
  t.records.push_back({0, 1.0 / 3.0, 2.5, 0.125, 7.0, 10});
  t.records.push_back({5, 1e-300, -0.0, std::nullopt, std::nullopt, 12345});
  return t;
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

TEST(TraceCsv, HeaderAndEmptyOptionals) {
  std::ostringstream out;
  write_csv(out, sample());
  const auto ls = lines(out.str());
  ASSERT_EQ(ls.size(), 3u);
  EXPECT_EQ(ls[0], "k,merit_primary,merit_aux,dist_sq,potential,elapsed_ns");
  EXPECT_EQ(ls[1], "0," + format_double(1.0 / 3.0) + ",2.5,0.125,7,10");
  EXPECT_EQ(ls[2], "5," + format_double(1e-300) + "," + format_double(-0.0) + ",,,12345");
  EXPECT_EQ(out.str().back(), '\n');
  EXPECT_EQ(out.str().find('\r'), std::string::npos);
}

TEST(TraceCsv, NumbersRoundTrip) {
  std::ostringstream out;
  write_csv(out, sample());
  const auto ls = lines(out.str());
  const auto comma = ls[1].find(',');
  const auto next = ls[1].find(',', comma + 1);
  EXPECT_EQ(parse_double(ls[1].substr(comma + 1, next - comma - 1)), 1.0 / 3.0);
}

TEST(TraceJsonl, ParsesWithIndependentReader) {
  std::ostringstream out;
  write_jsonl(out, sample());
  const auto ls = lines(out.str());
  ASSERT_EQ(ls.size(), 2u);
  const auto a = nlohmann::json::parse(ls[0]);
  EXPECT_EQ(a.at("k").get<int>(), 0);
  EXPECT_EQ(a.at("merit_primary").get<double>(), 1.0 / 3.0);
  EXPECT_EQ(a.at("dist_sq").get<double>(), 0.125);
  EXPECT_EQ(a.at("potential").get<double>(), 7.0);
  EXPECT_EQ(a.at("elapsed_ns").get<long>(), 10);
  const auto b = nlohmann::json::parse(ls[1]);
  EXPECT_TRUE(b.at("dist_sq").is_null());
  EXPECT_TRUE(b.at("potential").is_null());
  EXPECT_EQ(b.at("merit_primary").get<double>(), 1e-300);
  std::vector<std::string> keys;
  for (const auto& [key, value] : a.items()) keys.push_back(key);
  EXPECT_EQ(keys.size(), 6u);
}

TEST(TraceNames, Stable) {
  EXPECT_EQ(to_string(Termination::Tolerance), "tolerance");
  EXPECT_EQ(to_string(Termination::MaxIter), "max-iter");
  EXPECT_EQ(to_string(Termination::Divergence), "divergence");
  EXPECT_EQ(to_string(PotentialKind::TwoTerm), "two-term");
}

}  // namespace
}  // namespace viaccel
