#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <utility>
#include <vector>

#include "pelltrib/realnum.hpp"

namespace pelltrib {

struct Convergent {
  mpz_class p;
  mpz_class q;
};

// Certified continued fraction [a0; a1, a2, ...] of a real target together
// with its convergents p_k/q_k (a0 is the integer part).
struct CFExpansion {
  CertifiedReal target;
  std::vector<mpz_class> quotients;
  std::vector<Convergent> convergents;

  std::size_t size() const { return quotients.size(); }
};

// Expands until the last denominator exceeds q_min. A quotient is emitted
// only when the floor of the complete quotient agrees at both ends of the
// target's enclosure; otherwise the target is re-evaluated one rung higher
// on the policy ladder. Throws InsufficientPrecision at the cap (which is
// also what a rational target ends in).
CFExpansion expand_until_q_exceeds(const CertifiedReal& target, const mpz_class& q_min,
                                   const PrecisionPolicy& policy = {});

// First `terms` quotients a0 .. a_(terms-1), same certification rule.
CFExpansion expand_terms(const CertifiedReal& target, std::size_t terms,
                         const PrecisionPolicy& policy = {});

// Convergents of a finite quotient list, seeded by p_-1 = 1, q_-1 = 0,
// p_-2 = 0, q_-2 = 1.
std::vector<Convergent> convergents_of(const std::vector<mpz_class>& quotients);

struct MaxQuotient {
  mpz_class value;
  std::size_t index = 0;
};

// Largest a_i for 0 <= i <= k_max (first index on ties). Throws DomainError
// when the expansion is shorter than k_max + 1.
MaxQuotient max_partial_quotient(const CFExpansion& exp, std::size_t k_max);

struct ApproxBound {
  mpq_class c;            // |x target - y| > c / x for 1 <= x <= x_max
  MaxQuotient a_max;      // over a_0 .. a_(K+1)
  std::size_t K = 0;      // q_K <= x_max < q_(K+1)
};

// Worst-case Diophantine bound 1/(a_max + 2) for all denominators up to
// x_max: with q_k <= x < q_(k+1), |x t - y| >= |q_k t - p_k| > 1/((a_(k+1)+2) q_k).
// Throws DomainError when x_max is not below the last computed denominator.
ApproxBound approx_lower_bound(const CFExpansion& exp, const mpz_class& x_max);

// True iff y/x in lowest terms is one of the computed convergents.
bool legendre_check(const mpz_class& x, const mpz_class& y, const CFExpansion& exp);

}  // namespace pelltrib
