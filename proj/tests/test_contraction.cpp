#include <gtest/gtest.h>

#include "viaccel/certificate.hpp"
#include "viaccel/contraction.hpp"
#include "viaccel/generators.hpp"
#include "viaccel/run.hpp"

namespace viaccel {
namespace {

const LinearVi& instance() {
  static const LinearVi g = gen_linear_vi(20, 4, 1e-2, false);
  return g;
}

IterateTrace certified_run(const RateCertificate& cert, const ViMethodSpec& spec, std::size_t iters) {
  RunOptions opts;
  opts.potential = potential_for(cert);
  return run(instance().problem, spec, Vector(20, 1.0), StopCriteria{iters, 0.0}, opts);
}

TEST(CheckContraction, CertifiedExtraPointRun) {
  const auto& p = instance().problem;
  const ViParams params = default_vi_params(Regime::ViUnrestricted, p.mu(), p.lip());
  const RateCertificate cert = certify_vi_unrestricted(p.mu(), p.lip(), params);
  const ContractionReport rep =
      check_contraction(certified_run(cert, {ViMethod::ExtraPoint, params, false}, 3000), cert);
  EXPECT_TRUE(rep.ok());
  EXPECT_LE(rep.max_violation, kContractionTol);
  EXPECT_GT(rep.checked_steps, 100u);
}

TEST(CheckContraction, OgdaEndpointBound) {
  const auto& p = instance().problem;
  const double a = 0.5 / p.lip();
  const ViParams params{a, 0, 0, 0, a / (1 + p.sigma())};
  const RateCertificate cert = certify_ogda(p.mu(), p.lip(), params);
  const ContractionReport rep = check_contraction(certified_run(cert, {ViMethod::Ogda, params, false}, 2000), cert);
  EXPECT_TRUE(rep.endpoint_checked);
  EXPECT_TRUE(rep.ok());
}

TEST(CheckContraction, ConstantTraceAtSolution) {
  const auto& p = instance().problem;
  const ViParams params = default_vi_params(Regime::ViUnrestricted, p.mu(), p.lip());
  const RateCertificate cert = certify_vi_unrestricted(p.mu(), p.lip(), params);
  RunOptions opts;
  opts.potential = potential_for(cert);
  const IterateTrace t =
      run(p, {ViMethod::ExtraPoint, params, false}, *p.solution(), StopCriteria{50, 0.0}, opts);
  const ContractionReport rep = check_contraction(t, cert);
  EXPECT_TRUE(rep.ok());
  EXPECT_TRUE(rep.violating_iters.empty());
}

TEST(CheckContraction, TamperedStepIsReported) {
  const auto& p = instance().problem;
  const ViParams params = default_vi_params(Regime::ViUnrestricted, p.mu(), p.lip());
  const RateCertificate cert = certify_vi_unrestricted(p.mu(), p.lip(), params);
  IterateTrace t = certified_run(cert, {ViMethod::ExtraPoint, params, false}, 40);
  ASSERT_GT(t.records.size(), 20u);
  auto& r = t.records[10];
  r.potential = *t.records[9].potential * 1.5;
  const ContractionReport rep = check_contraction(t, cert);
  EXPECT_FALSE(rep.ok());
  EXPECT_GT(rep.max_violation, 0.4);
  ASSERT_EQ(rep.violating_iters.size(), 1u);
  EXPECT_EQ(rep.violating_iters.front(), r.k);
}

TEST(CheckContraction, RejectsUnusableInputs) {
  const auto& p = instance().problem;
  const ViParams params = default_vi_params(Regime::ViUnrestricted, p.mu(), p.lip());
  const RateCertificate cert = certify_vi_unrestricted(p.mu(), p.lip(), params);
  IterateTrace no_potential = run(p, {ViMethod::ExtraPoint, params, false}, Vector(20, 1.0), StopCriteria{5, 0.0});
  EXPECT_THROW(check_contraction(no_potential, cert), std::invalid_argument);

  IterateTrace ok = certified_run(cert, {ViMethod::ExtraPoint, params, false}, 5);
  RateCertificate infeasible = cert;
  infeasible.feasible = false;
  EXPECT_THROW(check_contraction(ok, infeasible), std::invalid_argument);

  RateCertificate other = cert;
  other.potential = PotentialKind::Ogda;
  EXPECT_THROW(check_contraction(ok, other), std::invalid_argument);

  EXPECT_THROW(check_contraction(IterateTrace{}, cert), std::invalid_argument);
}

}  // namespace
}  // namespace viaccel
