#include <gtest/gtest.h>

#include <cmath>

#include "viaccel/certificate.hpp"
#include "viaccel/presets.hpp"

namespace viaccel {
namespace {

void expect_params(const ViParams& p, double alpha, double beta, double gamma, double eta, double tau) {
  EXPECT_DOUBLE_EQ(p.alpha, alpha);
  EXPECT_DOUBLE_EQ(p.beta, beta);
  EXPECT_DOUBLE_EQ(p.gamma, gamma);
  EXPECT_DOUBLE_EQ(p.eta, eta);
  EXPECT_DOUBLE_EQ(p.tau, tau);
}

TEST(TableViPreset, UnconstrainedColumn) {
  const auto u = VITableColumn::Unconstrained;
  expect_params(table_vi_preset(ViMethod::Vanilla, u), 0.0095, 0, 0, 0, 0);
  expect_params(table_vi_preset(ViMethod::HeavyBall, u), 0.0119, 0, 0.0365, 0, 0);
  expect_params(table_vi_preset(ViMethod::Extragradient, u), 0.021, 0, 0, 0.021, 0);
  expect_params(table_vi_preset(ViMethod::Nesterov, u), 0.0084, 0.175, 0.175, 0, 0);
  expect_params(table_vi_preset(ViMethod::Ogda, u), 0.019, 0, 0, 0, 0.0117);
  expect_params(table_vi_preset(ViMethod::ExtraPoint, u), 0.021, 0.3276, 0.3276, 0.0202, 0.0021);
}

TEST(TableViPreset, ConstrainedColumn) {
  const auto c = VITableColumn::Constrained;
  expect_params(table_vi_preset(ViMethod::Vanilla, c), 0.0235, 0, 0, 0, 0);
  expect_params(table_vi_preset(ViMethod::HeavyBall, c), 0.0188, 0, 0.0146, 0, 0);
  expect_params(table_vi_preset(ViMethod::Extragradient, c), 0.034, 0, 0, 0.034, 0);
  expect_params(table_vi_preset(ViMethod::Nesterov, c), 0.0146, 0.175, 0.175, 0, 0);
  expect_params(table_vi_preset(ViMethod::Ogda, c), 0.024, 0, 0, 0, 0.0234);
  expect_params(table_vi_preset(ViMethod::ExtraPoint, c), 0.034, 0.34, 0.34, 0.0323, 0.0068);
}

TEST(TableOptGradientPreset, BothColumns) {
  const auto q = OptTableColumn::Quadratic;
  const auto l = OptTableColumn::NonQuadratic;
  expect_params(*table_opt_gradient_preset(ViMethod::Vanilla, q), 0.0407, 0, 0, 0, 0);
  expect_params(*table_opt_gradient_preset(ViMethod::Vanilla, l), 38.4615, 0, 0, 0, 0);
  expect_params(*table_opt_gradient_preset(ViMethod::HeavyBall, q), 0.0717, 0, 0.8349, 0, 0);
  expect_params(*table_opt_gradient_preset(ViMethod::HeavyBall, l), 9.8765, 0, 0.7778, 0, 0);
  expect_params(*table_opt_gradient_preset(ViMethod::Extragradient, l), 19.7, 0, 0, 19.7, 0);
  expect_params(*table_opt_gradient_preset(ViMethod::Nesterov, q), 0.0214, 0.9075, 0.9075, 0, 0);
  expect_params(*table_opt_gradient_preset(ViMethod::Ogda, l), 39.2, 0, 0, 0, 0.2);
  EXPECT_FALSE(table_opt_gradient_preset(ViMethod::ExtraPoint, q).has_value());
}

TEST(TableOptPreset, QuadraticColumnDependsOnSigma) {
  const double sigma = 0.0024;
  const OptParams p = table_opt_preset(OptTableColumn::Quadratic, sigma);
  EXPECT_DOUBLE_EQ(p.ti(1), 0.9538);
  EXPECT_NEAR(p.ti(1) + p.ti(2), 1.0, 1e-15);
  EXPECT_DOUBLE_EQ(p.ti(3), 0.9);
  EXPECT_DOUBLE_EQ(p.ti(4), 0.0277);
  EXPECT_DOUBLE_EQ(p.ti(5), 6.3712);
  EXPECT_DOUBLE_EQ(p.ti(6), 6.9252);
  EXPECT_DOUBLE_EQ(p.ti(8), std::sqrt(sigma));
  EXPECT_NEAR(p.ti(7) + p.ti(8), 1.0, 1e-15);
  EXPECT_DOUBLE_EQ(p.ti(9), 0.0485);
  EXPECT_DOUBLE_EQ(p.theta, p.ti(8));
  EXPECT_DOUBLE_EQ(p.c, p.theta / (2 * p.ti(9)));
  EXPECT_DOUBLE_EQ(p.delta, p.ti(3));
}

TEST(TableOptPreset, NonQuadraticColumn) {
  const OptParams p = table_opt_preset(OptTableColumn::NonQuadratic, 0.5);
  EXPECT_DOUBLE_EQ(p.ti(1), 0.7363);
  EXPECT_DOUBLE_EQ(p.ti(5), 5.5402);
  EXPECT_DOUBLE_EQ(p.ti(6), 6.6482);
  EXPECT_DOUBLE_EQ(p.ti(7), 0.6419);
  EXPECT_NEAR(p.ti(8), 1.0 - 0.6419, 1e-15);
  EXPECT_DOUBLE_EQ(p.ti(9), 71.6115);
}

TEST(PaperDefaultVi, DefaultsAreCertified) {
  const double mu = 0.1, lip = 1.0;
  for (bool restricted : {false, true}) {
    const ViParams ep = paper_default_vi(ViMethod::ExtraPoint, mu, lip, false, restricted);
    EXPECT_TRUE(certify_method(ViMethod::ExtraPoint, restricted, mu, lip, ep).feasible);
  }
  EXPECT_TRUE(certify_method(ViMethod::Extragradient, false, mu, lip,
                             paper_default_vi(ViMethod::Extragradient, mu, lip, false, false))
                  .feasible);
  EXPECT_TRUE(certify_method(ViMethod::Ogda, false, mu, lip, paper_default_vi(ViMethod::Ogda, mu, lip, false, false))
                  .feasible);
  EXPECT_DOUBLE_EQ(paper_default_vi(ViMethod::Vanilla, mu, lip, true, false).alpha, 1.0 / lip);
  EXPECT_DOUBLE_EQ(paper_default_vi(ViMethod::Vanilla, mu, lip, false, false).alpha, mu / (lip * lip));
}

}  // namespace
}  // namespace viaccel
