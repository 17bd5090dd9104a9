#include "pelltrib/reduction.hpp"

#include <optional>

#include "pelltrib/contfrac.hpp"

namespace pelltrib {

namespace {

struct XiAt {
  CertifiedReal xi;
  int sign;
  mpfr_prec_t bits;
};

XiAt certify_xi(const CertifiedReal& xi, const CertifiedReal& kappa, const mpz_class& M,
                const mpz_class& Q, const PrecisionPolicy& policy) {
  return with_refinement(policy, [&](mpfr_prec_t p) {
    const CertifiedReal x = xi.at_bits(p);
    const Interval& e = x.enclosure();
    if (e.contains_zero()) {
      throw InsufficientPrecision("xi enclosure " + e.describe() + " contains zero");
    }
    // |xi| >= margin; kappa must be accurate to margin / (10 M Q)
    mpq_class margin = e.is_positive() ? e.lo().to_rational() : mpq_class(-e.hi().to_rational());
    const mpq_class kappa_err = 2 * kappa.at_bits(p).err();
    if (mpq_class(M * Q) * kappa_err * 10 > margin) {
      throw InsufficientPrecision("kappa not accurate enough for xi at Q = " + Q.get_str());
    }
    return XiAt{x, e.is_positive() ? 1 : -1, p};
  });
}

}  // namespace

ReductionOutcome reduce(const ReductionInstance& in, std::size_t max_convergents,
                        const PrecisionPolicy& policy) {
  if (in.M < 1) throw DomainError("reduce: M must be >= 1");
  if (certify_sign(in.A, policy) <= 0) throw DomainError("reduce: A must be positive");
  if (!certify_less(CertifiedReal(1), in.B, policy)) throw DomainError("reduce: B must exceed 1");
  if (max_convergents < 1) throw DomainError("reduce: max_convergents must be >= 1");

  const mpz_class six_m = 6 * in.M;
  CFExpansion cf = expand_until_q_exceeds(in.kappa, six_m, policy);
  const std::size_t first = cf.size() - 1;
  const CertifiedReal Mr = CertifiedReal::from_integer(in.M);

  std::vector<TriedConvergent> tried;
  for (std::size_t j = first; j < first + max_convergents; ++j) {
    if (j >= cf.size()) {
      try {
        cf = expand_terms(in.kappa, j + 1, policy);
      } catch (const InsufficientPrecision& e) {
        throw ReductionFailed(std::string("continued fraction stalled: ") + e.what(), tried);
      }
    }
    const mpz_class& Q = cf.convergents[j].q;
    const CertifiedReal Qr = CertifiedReal::from_integer(Q);
    const CertifiedReal xi =
        nearest_int_distance(in.mu * Qr) - Mr * nearest_int_distance(in.kappa * Qr);

    TriedConvergent t{j, Q, "", 0};
    std::optional<XiAt> got;
    try {
      got = certify_xi(xi, in.kappa, in.M, Q, policy);
      t.sign = got->sign;
      t.xi = got->xi.enclosure().describe(12);
    } catch (const InsufficientPrecision&) {
      t.sign = 0;
      t.xi = xi.at_bits(policy.max_bits).enclosure().describe(12);
    }
    tried.push_back(t);
    if (!got || got->sign < 0) continue;

    ReductionOutcome out;
    out.index = j;
    out.Q = Q;
    out.xi = got->xi;
    out.bits = got->bits;
    const CertifiedReal A = in.A.at_bits(got->bits), B = in.B.at_bits(got->bits);
    out.threshold = log(A * Qr.at_bits(got->bits) / out.xi) / log(B);
    // outward rounding already widens the threshold; its upper endpoint
    // rounded up is a safe k_bound
    out.k_bound = ceil_upper(out.threshold);
    out.max_k = out.k_bound - 1;
    out.tried = std::move(tried);
    return out;
  }
  throw ReductionFailed("no positive xi among " + std::to_string(max_convergents) +
                            " convergents with Q > " + six_m.get_str(),
                        std::move(tried));
}

ExclusionClaim exclusion_statement(const ReductionOutcome& outcome,
                                   const ReductionInstance& instance) {
  ExclusionClaim c;
  c.M = instance.M;
  c.k_min = outcome.k_bound;
  c.A = instance.A.to_decimal(12);
  c.B = instance.B.to_decimal(12);
  c.statement = "no integers (m, n, k) with 0 <= m <= " + c.M.get_str() + " and k >= " +
                c.k_min.get_str() + " satisfy 0 < |m*kappa - n + mu| < " + c.A + " * " + c.B +
                "^(-k)";
  return c;
}

}  // namespace pelltrib
