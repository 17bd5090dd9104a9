#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "pelltrib/realnum.hpp"

namespace pelltrib {

// 0 < |m kappa - n + mu| < A B^-k with 0 <= m <= M.
struct ReductionInstance {
  CertifiedReal kappa;
  CertifiedReal mu;
  mpz_class M = 1;
  CertifiedReal A;
  CertifiedReal B;
};

// One convergent denominator tried by reduce().
struct TriedConvergent {
  std::size_t index = 0;
  mpz_class Q;
  std::string xi;    // enclosure of ||mu Q|| - M ||kappa Q||
  int sign = 0;      // +1, -1, or 0 when undecided at the precision cap
};

struct ReductionOutcome {
  std::size_t index = 0;  // k with Q = q_k of kappa
  mpz_class Q;
  CertifiedReal xi;
  CertifiedReal threshold;  // log(A Q / xi) / log B
  mpz_class k_bound;        // ceil of the threshold's upper endpoint
  mpz_class max_k;          // k_bound - 1, the largest k left open
  mpfr_prec_t bits = 0;     // precision at which xi was certified
  std::vector<TriedConvergent> tried;
};

class ReductionFailed : public std::runtime_error {
 public:
  ReductionFailed(const std::string& what, std::vector<TriedConvergent> tried)
      : std::runtime_error("reduction failed: " + what), tried_(std::move(tried)) {}
  const std::vector<TriedConvergent>& tried() const { return tried_; }

 private:
  std::vector<TriedConvergent> tried_;
};

// Walks the convergents Q of kappa with Q > 6M in increasing order and
// returns the first one with xi = ||mu Q|| - M ||kappa Q|| certified
// positive. Before a sign is accepted, kappa must be known to within
// |xi| / (10 M Q); the enclosures are refined until it is. Throws
// ReductionFailed after max_convergents candidates, DomainError on a bad
// instance.
ReductionOutcome reduce(const ReductionInstance& instance, std::size_t max_convergents = 16,
                        const PrecisionPolicy& policy = {});

struct ExclusionClaim {
  mpz_class M;
  mpz_class k_min;
  std::string A;
  std::string B;
  std::string statement;
};

// No integers (m, n, k) with 0 <= m <= M and k >= k_bound satisfy
// 0 < |m kappa - n + mu| < A B^-k.
ExclusionClaim exclusion_statement(const ReductionOutcome& outcome,
                                   const ReductionInstance& instance);

}  // namespace pelltrib
