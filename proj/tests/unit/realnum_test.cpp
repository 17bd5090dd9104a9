#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pelltrib/realnum.hpp"

namespace pelltrib {
namespace {

TEST(Enclosure, RandomRationalArithmeticIsSound) {
  const auto r = oracle::enclosure_soundness(10000, 20261018);
  EXPECT_EQ(r.cases, 10000u);
  EXPECT_EQ(r.violations, 0u) << r.summary();
}

TEST(Enclosure, DirectedRoundingOnOneThird) {
  const Interval x = Interval::enclose(mpq_class(1, 3), 64);
  EXPECT_TRUE(x.contains(mpq_class(1, 3)));
  EXPECT_FALSE(x.is_point());
  EXPECT_LT(x.radius(), mpq_class(1, mpz_class(1) << 62));
}

TEST(CertifiedReal, DecimalsStayExact) {
  const CertifiedReal a = CertifiedReal::from_decimal("14.8");
  const CertifiedReal b = CertifiedReal::from_decimal("0.16");
  ASSERT_NE((a * b).exact_value(), nullptr);
  EXPECT_EQ(*(a * b).exact_value(), mpq_class(296, 125));
  EXPECT_TRUE(certify_less(b, a));
  EXPECT_TRUE(certify_less_equal(b, b));
  EXPECT_EQ(certify_sign(b - b), 0);
}

TEST(CertifiedReal, SqrtTwoRefinesToRequestedBits) {
  const CertifiedReal s = sqrt(CertifiedReal(2)).at_bits(1024);
  const Interval& e = s.enclosure();
  const mpq_class lo = e.lo().to_rational(), hi = e.hi().to_rational();
  EXPECT_LT(lo * lo, 2);
  EXPECT_GT(hi * hi, 2);
  EXPECT_LT(hi - lo, mpq_class(1, mpz_class(1) << 1000));
}

TEST(CertifiedReal, ExpOfLogContainsArgument) {
  for (long v : {2L, 3L, 10L, 12345L}) {
    const CertifiedReal x = exp(log(CertifiedReal(v)));
    EXPECT_TRUE(x.enclosure().contains(mpq_class(v))) << v;
  }
}

TEST(CertifiedReal, UndecidableComparisonThrowsAtCap) {
  PrecisionPolicy p;
  p.initial_bits = 64;
  p.max_bits = 256;
  const CertifiedReal two = sqrt(CertifiedReal(2)) * sqrt(CertifiedReal(2));
  EXPECT_THROW(certify_less(two, CertifiedReal(2), p), InsufficientPrecision);
  EXPECT_THROW(certified_floor(two, p), InsufficientPrecision);
}

TEST(CertifiedReal, FloorOfScaledSqrtMatchesIntegerSqrt) {
  mpz_class scale, n, root;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, 30);
  n = 2 * scale * scale;
  mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
  const CertifiedReal x = sqrt(CertifiedReal(2)) * CertifiedReal::from_integer(scale);
  EXPECT_EQ(certified_floor(x), root);
  EXPECT_EQ(certified_ceil(x), root + 1);
  EXPECT_EQ(floor_lower(x), root);
  EXPECT_EQ(ceil_upper(x), root + 1);
}

TEST(CertifiedReal, NearestIntDistanceEnvelope) {
  const Interval straddle = ia::hull(Interval::enclose(mpq_class(99, 100), 64),
                                     Interval::enclose(mpq_class(101, 100), 64));
  const Interval d = ia::nearest_int_distance(straddle);
  EXPECT_EQ(d.lo().to_rational(), 0);
  EXPECT_GE(d.hi().to_rational(), mpq_class(1, 100));

  const Interval half = ia::hull(Interval::enclose(mpq_class(49, 100), 64),
                                 Interval::enclose(mpq_class(51, 100), 64));
  EXPECT_EQ(ia::nearest_int_distance(half).hi().to_rational(), mpq_class(1, 2));

  const CertifiedReal x = nearest_int_distance(CertifiedReal::from_decimal("7.3"));
  EXPECT_TRUE(x.enclosure().contains(mpq_class(3, 10)));
}

TEST(CertifiedReal, ToDecimal) {
  EXPECT_EQ(CertifiedReal::from_rational(mpq_class(1, 3)).to_decimal(10).substr(0, 12), "0.3333333333");
}

TEST(ParseDecimal, AcceptsExponents) {
  EXPECT_EQ(parse_decimal("1e16"), mpq_class(mpz_class("10000000000000000")));
  EXPECT_EQ(parse_decimal("-2.5e-3"), mpq_class(-1, 400));
  EXPECT_EQ(parse_decimal("2.4"), mpq_class(12, 5));
  EXPECT_THROW(parse_decimal("abc"), DomainError);
  EXPECT_THROW(parse_decimal("1.2.3"), DomainError);
  EXPECT_THROW(parse_decimal("1e"), DomainError);
}

TEST(PrecisionPolicy, LadderEndsAtCap) {
  PrecisionPolicy p;
  p.initial_bits = 100;
  p.max_bits = 700;
  const auto l = p.ladder();
  ASSERT_FALSE(l.empty());
  EXPECT_EQ(l.front(), 100);
  EXPECT_EQ(l.back(), 700);
  PrecisionPolicy bad;
  bad.initial_bits = 32;
  EXPECT_THROW(bad.validate(), DomainError);
}

TEST(CertifiedReal, LogOfNonPositiveIsDomainError) {
  EXPECT_THROW(log(CertifiedReal(0)), DomainError);
  EXPECT_THROW(sqrt(CertifiedReal(-1)), DomainError);
}

}  // namespace
}  // namespace pelltrib
