#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "support.hpp"
#include "viaccel/rng.hpp"

namespace viaccel {
namespace {

using testing::to_eigen;

TEST(Vector, RejectsNonFiniteEntries) {
  EXPECT_THROW(Vector({1.0, std::nan("")}), std::invalid_argument);
  EXPECT_THROW(Vector({std::numeric_limits<double>::infinity()}), std::invalid_argument);
  EXPECT_THROW(Vector(std::vector<double>{}), std::invalid_argument);
  EXPECT_THROW(Vector(0), std::invalid_argument);
}

TEST(Vector, Arithmetic) {
  Vector a{1.0, 2.0, 3.0};
  const Vector b{4.0, -1.0, 0.5};
  EXPECT_DOUBLE_EQ(a.dot(b), 4.0 - 2.0 + 1.5);
  EXPECT_DOUBLE_EQ(a.squared_norm(), 14.0);
  EXPECT_DOUBLE_EQ(squared_distance(a, b), 9.0 + 9.0 + 6.25);
  a.axpy(2.0, b);
  EXPECT_EQ(a, (Vector{9.0, 0.0, 4.0}));
  EXPECT_EQ(a - b, (Vector{5.0, 1.0, 3.5}));
  EXPECT_EQ(0.5 * b, (Vector{2.0, -0.5, 0.25}));
  Vector out(3);
  linear_combination(2.0, b, -1.0, b, out);
  EXPECT_EQ(out, b);
}

TEST(Vector, SizeMismatchThrows) {
  Vector a{1.0, 2.0};
  const Vector b{1.0, 2.0, 3.0};
  EXPECT_THROW(a.dot(b), std::invalid_argument);
  EXPECT_THROW(a += b, std::invalid_argument);
  EXPECT_THROW(squared_distance(a, b), std::invalid_argument);
}

TEST(Matrix, MultiplyMatchesEigen) {
  Rng rng(3);
  Matrix m(7, 5);
  for (std::size_t r = 0; r < 7; ++r) {
    for (std::size_t c = 0; c < 5; ++c) m(r, c) = rng.uniform(-1.0, 1.0);
  }
  const Vector x = rng.uniform_vector(5, -1.0, 1.0);
  const Vector shift = rng.uniform_vector(7, -1.0, 1.0);
  Vector y(7);
  m.multiply(x, y, &shift);
  const Eigen::VectorXd ref = to_eigen(m) * to_eigen(x) + to_eigen(shift);
  for (std::size_t i = 0; i < 7; ++i) EXPECT_NEAR(y[i], ref(static_cast<Eigen::Index>(i)), 1e-14);

  const Vector w = rng.uniform_vector(7, -1.0, 1.0);
  Vector t(5);
  m.multiply_transposed(w, t);
  const Eigen::VectorXd ref_t = to_eigen(m).transpose() * to_eigen(w);
  for (std::size_t i = 0; i < 5; ++i) EXPECT_NEAR(t[i], ref_t(static_cast<Eigen::Index>(i)), 1e-14);
  EXPECT_EQ(m.transposed().transposed(), m);
}

TEST(Rng, SeededStreamsRepeat) {
  Rng a(42);
  Rng b(42);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.normal(), b.normal());
  Rng c(43);
  EXPECT_NE(Rng(42).uniform(), c.uniform());
}

TEST(Rng, UniformStaysInRange) {
  Rng rng(1);
  for (int i = 0; i < 10000; ++i) {
    const double u = rng.uniform(-2.0, 3.0);
    ASSERT_GE(u, -2.0);
    ASSERT_LT(u, 3.0);
  }
}

}  // namespace
}  // namespace viaccel
