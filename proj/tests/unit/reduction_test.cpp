#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pelltrib/pell.hpp"
#include "pelltrib/reduction.hpp"
#include "pelltrib/tribonacci.hpp"

namespace pelltrib {
namespace {

ReductionInstance standard_instance(const CertifiedReal& delta) {
  const BinetConstants& bc = default_binet_constants();
  ReductionInstance in;
  in.kappa = log(delta) / bc.log_alpha;
  in.mu = bc.chi;
  in.M = mpz_class("10000000000000000");
  in.A = CertifiedReal::from_decimal("14.8");
  in.B = CertifiedReal::from_decimal("2.4");
  return in;
}

TEST(Reduce, DeltaTwoPlusSqrtThree) {
  const ReductionOutcome r = reduce(standard_instance(fundamental(3).delta));
  EXPECT_EQ(r.index, 31u);
  EXPECT_EQ(r.Q, mpz_class("156827205418169727"));
  EXPECT_TRUE(certify_less(CertifiedReal::from_decimal("0.039"), r.xi));
  EXPECT_EQ(r.k_bound, 52);
  EXPECT_EQ(r.max_k, 51);
}

TEST(Reduce, DeltaOnePlusSqrtTwo) {
  const ReductionOutcome r = reduce(standard_instance(fundamental(2).delta));
  EXPECT_EQ(r.index, 28u);
  EXPECT_EQ(r.Q, mpz_class("98827474195551603"));
  EXPECT_TRUE(certify_less(CertifiedReal::from_decimal("0.071"), r.xi));
  EXPECT_EQ(r.max_k, 49);
}

TEST(Reduce, SkipsNegativeXi) {
  // X1 = T_17 = 10609, eps = +1: the first Q above 6M gives xi < 0
  const ReductionInstance in = standard_instance(delta_from_x1(10609, 1));
  const ReductionOutcome r = reduce(in);
  EXPECT_EQ(r.index, 29u);
  ASSERT_EQ(r.tried.size(), 2u);
  EXPECT_EQ(r.tried[0].sign, -1);
  EXPECT_EQ(r.tried[1].sign, 1);
  try {
    reduce(in, 1);
    FAIL() << "expected ReductionFailed";
  } catch (const ReductionFailed& e) {
    ASSERT_EQ(e.tried().size(), 1u);
    EXPECT_EQ(e.tried()[0].sign, -1);
  }
}

TEST(Reduce, Deterministic) {
  const ReductionInstance in = standard_instance(fundamental(3).delta);
  const ReductionOutcome a = reduce(in), b = reduce(in);
  EXPECT_EQ(a.Q, b.Q);
  EXPECT_EQ(a.k_bound, b.k_bound);
}

TEST(Reduce, RejectsBadInstances) {
  ReductionInstance in = standard_instance(fundamental(3).delta);
  in.M = 0;
  EXPECT_THROW(reduce(in), DomainError);
  in = standard_instance(fundamental(3).delta);
  in.B = CertifiedReal(1);
  EXPECT_THROW(reduce(in), DomainError);
  in = standard_instance(fundamental(3).delta);
  EXPECT_THROW(reduce(in, 0), DomainError);
}

TEST(Reduce, ExclusionClaimNamesTheBound) {
  const ReductionInstance in = standard_instance(fundamental(3).delta);
  const ExclusionClaim c = exclusion_statement(reduce(in), in);
  EXPECT_EQ(c.k_min, 52);
  EXPECT_NE(c.statement.find("k >= 52"), std::string::npos);
}

TEST(Reduce, ToyInstancesAgainstExhaustiveSearch) {
  const auto r = oracle::toy_reductions(150, 424242, 1000);
  EXPECT_GE(r.cases, 150u) << r.attempted << " attempted, " << r.failed_reductions << " failed";
  EXPECT_EQ(r.violations, 0u) << r.summary();
}

}  // namespace
}  // namespace pelltrib
