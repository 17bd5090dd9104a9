#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "pelltrib/pell.hpp"

namespace pelltrib {
namespace {

TEST(Fundamental, AgreesWithSmallestYSearch) {
  std::size_t checked = 0;
  for (long d = 2; d <= 150; ++d) {
    if (mpz_perfect_square_p(mpz_class(d).get_mpz_t())) continue;
    const FundamentalSolution f = fundamental(d);
    ASSERT_EQ(f.x1 * f.x1 - f.d * f.y1 * f.y1, f.epsilon) << d;
    if (f.y1 > 200000) continue;
    const auto [x, y, eps] = oracle::pell_fundamental_bruteforce(d, f.y1.get_si());
    EXPECT_EQ(x, f.x1) << d;
    EXPECT_EQ(y, f.y1) << d;
    EXPECT_EQ(eps, f.epsilon) << d;
    ++checked;
  }
  EXPECT_GT(checked, 120u);
}

TEST(Fundamental, KnownLargeCase) {
  const FundamentalSolution f = fundamental(61);
  EXPECT_EQ(f.x1, 29718);
  EXPECT_EQ(f.y1, 3805);
  EXPECT_EQ(f.epsilon, -1);
}

TEST(Fundamental, ExceptionalDs) {
  const FundamentalSolution f2 = fundamental(2), f3 = fundamental(3);
  EXPECT_EQ(f2.x1, 1);
  EXPECT_EQ(f2.epsilon, -1);
  EXPECT_EQ(f3.x1, 2);
  EXPECT_EQ(f3.y1, 1);
  EXPECT_EQ(f3.epsilon, 1);
}

TEST(Fundamental, RejectsSquaresAndSmallD) {
  EXPECT_THROW(fundamental(4), DomainError);
  EXPECT_THROW(fundamental(0), DomainError);
  EXPECT_THROW(fundamental(-3), DomainError);
  EXPECT_NO_THROW(fundamental(12));  // nonsquare, not squarefree
}

TEST(PellIdentity, HoldsForSmallDsUpToFifty) {
  const auto r = oracle::pell_identity({2, 3, 5, 6, 7, 10}, 50);
  EXPECT_EQ(r.cases, 300u);
  EXPECT_EQ(r.violations, 0u) << r.summary();
}

TEST(XCoordinates, FromX1Alone) {
  const auto xs = x_coordinates_up_to(1, -1, 100);
  EXPECT_EQ(xs, (std::vector<mpz_class>{1, 3, 7, 17, 41, 99}));
  const auto ys = x_coordinates_up_to(2, 1, 200);
  EXPECT_EQ(ys, (std::vector<mpz_class>{2, 7, 26, 97}));
}

TEST(PEps, AgreesWithBinomialOracle) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> xd(1, 100000);
  for (int i = 0; i < 300; ++i) {
    const mpz_class x = xd(rng);
    const std::size_t n = 1 + i % 25;
    for (int eps : {1, -1}) {
      ASSERT_EQ(p_eps(eps, n, x), oracle::pell_x_binomial(eps, n, x)) << x << " " << n << " " << eps;
    }
  }
  EXPECT_EQ(p_plus(2, 5), 49);
  EXPECT_EQ(p_minus(2, 5), 51);
}

TEST(Sqfree, AgreesWithTrialDivision) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::uint64_t> nd(1, 10000000000ULL);
  for (int i = 0; i < 200; ++i) {
    const std::uint64_t n = nd(rng);
    const SqfreeDecomposition s = sqfree_decompose(mpz_class(static_cast<unsigned long>(n)));
    ASSERT_TRUE(s.complete) << n;
    ASSERT_EQ(s.d, oracle::squarefree_part(n)) << n;
    ASSERT_EQ(s.d * s.y * s.y, s.n) << n;
  }
  const SqfreeDecomposition s = sqfree_decompose(72);
  EXPECT_EQ(s.d, 2);
  EXPECT_EQ(s.y, 6);
}

TEST(Sqfree, PrimeSquaresBeyondTrialDivision) {
  // 1000003 and 1000033 are prime, past a 1e3 trial limit
  FactoringEffort e;
  e.trial_limit = 1000;
  const mpz_class p = 1000003, q = 1000033;
  const SqfreeDecomposition s = sqfree_decompose(p * p * q * 6, e);
  EXPECT_EQ(s.d * s.y * s.y, s.n);
  if (s.complete) {
    EXPECT_EQ(s.d, q * 6);
    EXPECT_EQ(s.y, p);
  }
}

TEST(Sqfree, StarvedBudgetIsFlaggedNotWrong) {
  FactoringEffort e;
  e.trial_limit = 100;
  e.rho_iterations = 1;
  const mpz_class p("1000000007"), q("998244353");
  const SqfreeDecomposition s = sqfree_decompose(p * p * q, e);
  EXPECT_EQ(s.d * s.y * s.y, s.n);
  EXPECT_FALSE(s.complete);
}

TEST(DeltaBounds, UpperAlwaysHolds) {
  for (long d : {2, 3, 5, 6, 7, 10}) {
    const DeltaBoundsReport r = delta_bounds_check(fundamental(d), 30);
    ASSERT_EQ(r.rows.size(), 30u);
    for (const auto& row : r.rows) EXPECT_TRUE(row.upper_holds) << d << " " << row.n;
  }
}

}  // namespace
}  // namespace pelltrib
