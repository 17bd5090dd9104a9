#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "pelltrib/tribonacci.hpp"

namespace pelltrib {
namespace {

mpq_class lo_of(const CertifiedReal& x) { return x.enclosure().lo().to_rational(); }
mpq_class hi_of(const CertifiedReal& x) { return x.enclosure().hi().to_rational(); }

TEST(Trib, MatchesLoopOracleAndRecurrence) {
  const TribCache t(1000);
  for (std::size_t m = 0; m <= 1000; ++m) {
    ASSERT_EQ(t[m], oracle::trib(m)) << m;
    if (m >= 3) ASSERT_EQ(t[m], t[m - 1] + t[m - 2] + t[m - 3]) << m;
  }
  EXPECT_EQ(trib(5), 7);
  EXPECT_EQ(trib(17), 10609);
  EXPECT_EQ(trib(300), oracle::trib(300));
}

TEST(Trib, StrictlyIncreasingFromTwo) {
  const TribCache t(400);
  for (std::size_t m = 2; m < 400; ++m) ASSERT_LT(t[m], t[m + 1]) << m;
}

TEST(Trib, IndicesOf) {
  const TribCache t(50);
  EXPECT_EQ(t.indices_of(1), (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(t.indices_of(0), (std::vector<std::size_t>{0}));
  EXPECT_EQ(t.indices_of(10609), (std::vector<std::size_t>{17}));
  EXPECT_TRUE(t.indices_of(8).empty());
}

TEST(Binet, AlphaBracketsTheRootExactly) {
  // f = x^3 - x^2 - x - 1 is increasing past 1, so a sign change across the
  // enclosure pins the root inside it
  for (const CertifiedReal& a : {alpha_newton(), alpha_radical()}) {
    EXPECT_LT(oracle::trib_poly(lo_of(a)), 0);
    EXPECT_GT(oracle::trib_poly(hi_of(a)), 0);
  }
  const CertifiedReal n = alpha_newton().at_bits(2000), r = alpha_radical().at_bits(2000);
  EXPECT_LE(lo_of(n), hi_of(r));
  EXPECT_LE(lo_of(r), hi_of(n));
}

TEST(Binet, ConstantBrackets) {
  const BinetConstants& c = default_binet_constants();
  auto inside = [](const CertifiedReal& x, const char* lo, const char* hi) {
    return lo_of(x) > parse_decimal(lo) && hi_of(x) < parse_decimal(hi);
  };
  EXPECT_TRUE(inside(c.alpha, "1.83", "1.84"));
  EXPECT_TRUE(inside(c.beta_abs, "0.73", "0.74"));
  EXPECT_TRUE(inside(c.a, "0.18", "0.19"));
  EXPECT_TRUE(inside(c.b_abs, "0.35", "0.36"));
}

TEST(Binet, TwiceAIsRootOfCubic) {
  // a(x) = x / (x^2 + 2x + 3) decreases past sqrt 3 and 11X^3 + 4X - 2 increases,
  // so evaluating at the alpha endpoints bounds the residual
  const CertifiedReal al = default_binet_constants().alpha.at_bits(400);
  auto two_a = [](const mpq_class& x) -> mpq_class { return 2 * x / (x * x + 2 * x + 3); };
  auto g = [](const mpq_class& X) -> mpq_class { return 11 * X * X * X + 4 * X - 2; };
  const mpq_class g_lo = g(two_a(hi_of(al))), g_hi = g(two_a(lo_of(al)));
  EXPECT_LE(g_lo, 0);
  EXPECT_GE(g_hi, 0);
  const mpq_class tiny = parse_decimal("1e-30");
  EXPECT_LT(-g_lo, tiny);
  EXPECT_LT(g_hi, tiny);

  const CertifiedReal& a = default_binet_constants().a;
  const CertifiedReal X = CertifiedReal(2) * a;
  const CertifiedReal res = abs(CertifiedReal(11) * pow(X, 3) + CertifiedReal(4) * X - CertifiedReal(2));
  EXPECT_TRUE(certify_less(res, CertifiedReal::from_decimal("1e-30")));
}

TEST(Binet, BetaModulusIsInverseSqrtAlpha) {
  const BinetConstants& c = default_binet_constants();
  EXPECT_TRUE((c.beta_abs * c.beta_abs * c.alpha).enclosure().contains(1));
}

TEST(Binet, ChiAgainstDoubleOracle) {
  const BinetConstants& c = default_binet_constants();
  const double alpha = c.alpha.to_double();
  const double a = alpha / (alpha * alpha + 2 * alpha + 3);
  EXPECT_NEAR(c.chi.to_double(), -std::log(2 * a) / std::log(alpha), 1e-12);
  EXPECT_NEAR(c.c1.to_double(), 1 / std::log(alpha), 1e-12);
  EXPECT_NEAR(c.chi.to_double(), 1.65118586184831, 1e-13);
}

TEST(Binet, DominantTermRoundsToTrib) {
  // T_m = a alpha^(m+1) + O(alpha^(-m/2))
  for (std::size_t m = 2; m <= 300; ++m) {
    const CertifiedReal x = binet_dominant_term(m) + CertifiedReal::from_rational(mpq_class(1, 2));
    ASSERT_EQ(certified_floor(x), oracle::trib(m)) << m;
  }
}

TEST(Binet, ResidualBelowOne) {
  for (std::size_t m = 1; m <= 200; ++m) {
    ASSERT_TRUE(certify_less(binet_residual(m), CertifiedReal(1))) << m;
  }
  const CertifiedReal bound =
      CertifiedReal::from_decimal("0.72") * pow(CertifiedReal::from_decimal("0.74"), 100);
  EXPECT_TRUE(certify_less(binet_residual(100), bound));
}

TEST(Binet, GrowthBoundsHold) {
  const GrowthReport r = check_growth_bounds(1000);
  EXPECT_EQ(r.m_max, 1000u);
  EXPECT_EQ(r.checked, 999u);
  EXPECT_THROW(check_growth_bounds(1), DomainError);
}

}  // namespace
}  // namespace pelltrib
