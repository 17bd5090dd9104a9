#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "pelltrib/contfrac.hpp"
#include "pelltrib/pell.hpp"
#include "pelltrib/tribonacci.hpp"

namespace pelltrib {
namespace {

std::vector<mpz_class> euclid(mpq_class x) {
  std::vector<mpz_class> out;
  while (true) {
    mpz_class a;
    mpz_fdiv_q(a.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    out.push_back(a);
    x -= a;
    if (x == 0) return out;
    x = 1 / x;
  }
}

CertifiedReal log_ratio(long d) {
  return log(fundamental(d).delta) / default_binet_constants().log_alpha;
}

TEST(ChiExpansion, LeadingQuotientsAndDenominators) {
  const CFExpansion e = expand_terms(default_binet_constants().chi, 35);
  const std::vector<mpz_class> head(e.quotients.begin(), e.quotients.begin() + 9);
  EXPECT_EQ(head, (std::vector<mpz_class>{1, 1, 1, 1, 6, 1, 1, 22, 1}));
  EXPECT_EQ(e.convergents[33].q, mpz_class("4999601640630812"));
  EXPECT_EQ(e.convergents[34].q, mpz_class("24351826693265967"));
  const MaxQuotient mq = max_partial_quotient(e, 34);
  EXPECT_EQ(mq.value, 22);
  EXPECT_EQ(mq.index, 7u);
}

TEST(LogDeltaExpansion, PublishedDenominators) {
  const mpz_class six_m("60000000000000000");
  const CFExpansion e3 = expand_until_q_exceeds(log_ratio(3), six_m);
  ASSERT_GT(e3.size(), 31u);
  EXPECT_EQ(e3.convergents[31].q, mpz_class("156827205418169727"));
  EXPECT_EQ(e3.size(), 32u);
  const CFExpansion e2 = expand_until_q_exceeds(log_ratio(2), six_m);
  ASSERT_GT(e2.size(), 28u);
  EXPECT_EQ(e2.convergents[28].q, mpz_class("98827474195551603"));
}

TEST(Expansion, RationalTargetsMatchEuclid) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> num(1, 1000000000L), den(1, 1000000);
  for (int i = 0; i < 200; ++i) {
    mpq_class x(num(rng), den(rng));
    x.canonicalize();
    const auto want = euclid(x);
    const CFExpansion e = expand_terms(CertifiedReal::from_rational(x), want.size());
    ASSERT_EQ(e.quotients, want) << x;
    ASSERT_EQ(mpq_class(e.convergents.back().p, e.convergents.back().q), x);
  }
  EXPECT_EQ(euclid(mpq_class(415, 93)), (std::vector<mpz_class>{4, 2, 6, 7}));
}

TEST(Expansion, ClassicalConstants) {
  const CFExpansion s2 = expand_terms(sqrt(CertifiedReal(2)), 40);
  EXPECT_EQ(s2.quotients[0], 1);
  for (std::size_t k = 1; k < 40; ++k) EXPECT_EQ(s2.quotients[k], 2) << k;

  const CertifiedReal phi = (CertifiedReal(1) + sqrt(CertifiedReal(5))) / CertifiedReal(2);
  const CFExpansion g = expand_terms(phi, 40);
  for (std::size_t k = 0; k < 40; ++k) EXPECT_EQ(g.quotients[k], 1) << k;

  // e = [2; 1, 2, 1, 1, 4, 1, 1, 6, ...]
  const CFExpansion ee = expand_terms(exp(CertifiedReal(1)), 30);
  EXPECT_EQ(ee.quotients[0], 2);
  for (std::size_t k = 1; k < 30; ++k) {
    const long want = (k % 3 == 2) ? static_cast<long>(2 * (k + 1) / 3) : 1;
    EXPECT_EQ(ee.quotients[k], want) << k;
  }
}

TEST(Convergents, DeterminantIdentity) {
  const CFExpansion e = expand_terms(default_binet_constants().chi, 35);
  for (std::size_t k = 1; k < e.size(); ++k) {
    const Convergent &a = e.convergents[k - 1], &b = e.convergents[k];
    const mpz_class det = b.p * a.q - a.p * b.q;
    EXPECT_EQ(det, (k % 2 == 1) ? 1 : -1) << k;
  }
  EXPECT_EQ(convergents_of({4, 2, 6, 7}).back().p, 415);
  EXPECT_EQ(convergents_of({4, 2, 6, 7}).back().q, 93);
}

TEST(Convergents, ApproximationLawEverywhere) {
  const auto r = oracle::cf_convergent_law();
  EXPECT_GT(r.cases, 300u);
  EXPECT_EQ(r.violations, 0u) << r.summary();
}

TEST(Convergents, LegendreCheck) {
  const CFExpansion e = expand_terms(sqrt(CertifiedReal(2)), 20);
  EXPECT_TRUE(legendre_check(e.convergents[10].q, e.convergents[10].p, e));
  EXPECT_FALSE(legendre_check(5, 8, e));
}

TEST(ApproxLowerBound, HoldsByExhaustion) {
  // |x t - y| > c / x for every 1 <= x <= x_max, y the nearest integer
  const CertifiedReal t = default_binet_constants().chi;
  const mpz_class x_max = 3000;
  const CFExpansion e = expand_until_q_exceeds(t, x_max);
  const ApproxBound b = approx_lower_bound(e, x_max);
  EXPECT_GT(b.c, 0);
  const CertifiedReal c = CertifiedReal::from_rational(b.c);
  for (long x = 1; x <= 3000; ++x) {
    const CertifiedReal X(x);
    const CertifiedReal gap = nearest_int_distance(X * t);
    ASSERT_TRUE(certify_less(c / X, gap)) << x;
  }
  EXPECT_THROW(approx_lower_bound(e, e.convergents.back().q * 10), DomainError);
}

TEST(ApproxLowerBound, ChiUpToTenToSixteen) {
  const CFExpansion e = expand_until_q_exceeds(default_binet_constants().chi, mpz_class("10000000000000000"));
  const ApproxBound b = approx_lower_bound(e, mpz_class("10000000000000000"));
  EXPECT_EQ(b.a_max.value, 22);
  EXPECT_EQ(b.c, mpq_class(1, 24));
  EXPECT_EQ(b.K, 33u);
}

}  // namespace
}  // namespace pelltrib
