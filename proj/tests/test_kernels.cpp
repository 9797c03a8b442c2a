#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "viaccel/kernels.hpp"
#include "viaccel/rng.hpp"

namespace viaccel {
namespace {

namespace k = kernels;

std::vector<double> random_data(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<double> v(n);
  for (auto& x : v) x = rng.uniform(-1.0, 1.0);
  return v;
}

class KernelEquivalence : public ::testing::TestWithParam<std::size_t> {
 protected:
  void SetUp() override {
    if (!k::avx2_table()) GTEST_SKIP() << "AVX2 backend unavailable";
  }
};

TEST_P(KernelEquivalence, ReductionsAgreeToRounding) {
  const std::size_t n = GetParam();
  const auto x = random_data(n, 1);
  const auto y = random_data(n, 2);
  const auto& s = k::scalar_table();
  const auto& v = *k::avx2_table();
  const double tol = 1e-14 * static_cast<double>(n + 1);
  EXPECT_NEAR(s.dot(x.data(), y.data(), n), v.dot(x.data(), y.data(), n), tol);
  EXPECT_NEAR(s.sq_dist(x.data(), y.data(), n), v.sq_dist(x.data(), y.data(), n), tol);
}

TEST_P(KernelEquivalence, ElementwiseKernelsAgreeBitwise) {
  const std::size_t n = GetParam();
  const auto x = random_data(n, 3);
  const auto y = random_data(n, 4);
  const auto lo = random_data(n, 5);
  std::vector<double> hi(n);
  for (std::size_t i = 0; i < n; ++i) hi[i] = lo[i] + 0.5;
  const auto& s = k::scalar_table();
  const auto& v = *k::avx2_table();

  std::vector<double> a(n), b(n);
  s.axpby(0.3, x.data(), -1.7, y.data(), a.data(), n);
  v.axpby(0.3, x.data(), -1.7, y.data(), b.data(), n);
  for (std::size_t i = 0; i < n; ++i) EXPECT_NEAR(a[i], b[i], 1e-15);

  a = y;
  b = y;
  s.axpy(2.5, x.data(), a.data(), n);
  v.axpy(2.5, x.data(), b.data(), n);
  for (std::size_t i = 0; i < n; ++i) EXPECT_NEAR(a[i], b[i], 1e-15);

  s.clamp_min(x.data(), 0.0, a.data(), n);
  v.clamp_min(x.data(), 0.0, b.data(), n);
  EXPECT_EQ(a, b);

  s.clamp(x.data(), lo.data(), hi.data(), a.data(), n);
  v.clamp(x.data(), lo.data(), hi.data(), b.data(), n);
  EXPECT_EQ(a, b);
}

TEST_P(KernelEquivalence, MatrixVectorAgree) {
  const std::size_t n = GetParam();
  const std::size_t rows = n + 3;
  const auto m = random_data(rows * n, 6);
  const auto x = random_data(n, 7);
  const auto shift = random_data(rows, 8);
  const auto w = random_data(rows, 9);
  const auto& s = k::scalar_table();
  const auto& v = *k::avx2_table();
  std::vector<double> a(rows), b(rows);
  s.gemv(m.data(), rows, n, x.data(), shift.data(), a.data());
  v.gemv(m.data(), rows, n, x.data(), shift.data(), b.data());
  for (std::size_t i = 0; i < rows; ++i) EXPECT_NEAR(a[i], b[i], 1e-14 * static_cast<double>(n + 1));
  std::vector<double> at(n), bt(n);
  s.gemv_t(m.data(), rows, n, w.data(), at.data());
  v.gemv_t(m.data(), rows, n, w.data(), bt.data());
  for (std::size_t i = 0; i < n; ++i) EXPECT_NEAR(at[i], bt[i], 1e-14 * static_cast<double>(rows + 1));
}

INSTANTIATE_TEST_SUITE_P(Sizes, KernelEquivalence, ::testing::Values(1, 3, 4, 7, 8, 17, 20, 64, 257));

TEST(KernelSelection, ScalarAlwaysAvailable) {
  const auto backends = k::available();
  ASSERT_FALSE(backends.empty());
  EXPECT_EQ(backends.front(), k::Backend::Scalar);
  const k::Backend original = k::active().backend;
  k::select(k::Backend::Scalar);
  EXPECT_EQ(k::active().backend, k::Backend::Scalar);
  k::select(original);
}

TEST(KernelSelection, ParseNames) {
  EXPECT_EQ(k::parse_backend("scalar"), k::Backend::Scalar);
  EXPECT_EQ(k::to_string(k::Backend::Avx2), "avx2");
  EXPECT_THROW(k::parse_backend("neon"), std::invalid_argument);
}

}  // namespace
}  // namespace viaccel
