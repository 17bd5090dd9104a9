#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "pelltrib/realnum.hpp"

namespace pelltrib {

// Matveev: log|Gamma| > -1.4 30^(l+3) l^4.5 d_L^2 (1 + log d_L)(1 + log D) A_1 ... A_l.
struct MatveevInput {
  unsigned l = 1;
  unsigned d_L = 1;
  mpz_class D = 3;
  std::vector<CertifiedReal> A;
};

// Throws DomainError unless l >= 1, l == A.size(), d_L >= 1, D >= 3 and
// every A_j >= 0.16.
void validate(const MatveevInput& in, const PrecisionPolicy& policy = {});

// 1.4 30^(l+3) l^4.5 d_L^2 (1 + log d_L) prod A_j, i.e. |bound| / (1 + log D).
CertifiedReal matveev_constant(unsigned l, unsigned d_L, const std::vector<CertifiedReal>& A);
CertifiedReal matveev_bound(const MatveevInput& in, const PrecisionPolicy& policy = {});

// Laurent-Mignotte-Nesterenko for two logarithms:
// log|Lambda| > -24.34 d_L^4 max(log b' + 0.14, 21/d_L, 1/2)^2 log B1 log B2.
struct LMNInput {
  unsigned d_L = 1;
  CertifiedReal logB1;
  CertifiedReal logB2;
  CertifiedReal b_prime;
};

void validate(const LMNInput& in, const PrecisionPolicy& policy = {});
CertifiedReal lmn_max_term(const LMNInput& in, const PrecisionPolicy& policy = {});
// 24.34 d_L^4 log B1 log B2
CertifiedReal lmn_constant(const LMNInput& in);
CertifiedReal lmn_bound(const LMNInput& in, const PrecisionPolicy& policy = {});

// Heights for delta^n (2a)^-1 alpha^-m - 1 over Q(sqrt d, alpha), d_L = 6.
struct HeightParams {
  CertifiedReal A1_coeff;  // A1 = A1_coeff * log delta (h(delta) = log(delta)/2)
  CertifiedReal A2;        // 2 log 11, from h(2a) = log(11)/3
  CertifiedReal A3;        // 2 log 1.84 >= 2 log alpha
  CertifiedReal h_two_a;
  CertifiedReal h_alpha;
};

// Certifies that 11X^3 + 4X - 2 has all roots inside the unit disc (so
// h(2a) = log(11)/3) and that 2 log 1.84 dominates 6 h(alpha). Throws
// Discrepancy otherwise.
HeightParams weil_height_params(const PrecisionPolicy& policy = {});
CertifiedReal A1_for(const CertifiedReal& delta);

// The three-logarithm instance with log delta factored out of A1.
MatveevInput matveev_preset();
// The two-logarithm instance for (2a, alpha) over Q(alpha); b' supplied.
LMNInput lmn_preset(const CertifiedReal& b_prime);

// Smallest integer X found by iterating x <- ceil(C (1 + log x)^k) such that
// every real x >= 1 with x < C (1 + log x)^k has x < X. Certified by
// X >= C (1 + log X)^k together with 1 + log X >= k, which makes
// x - C (1 + log x)^k increasing past X. Throws Discrepancy if the iteration
// does not settle.
mpz_class solve_implicit(const CertifiedReal& C, unsigned k, const PrecisionPolicy& policy = {});

// One certified inequality of the derivation.
struct ChainStep {
  std::string id;
  std::string claim;
  std::string value;  // the recomputed side, as decimal
  bool certified = false;
};

struct LemmaPrel {
  CertifiedReal delta;
  CertifiedReal matveev_constant;
  CertifiedReal n_coeff;  // 1.8e14
  CertifiedReal m_coeff;  // 3e14
  std::vector<ChainStep> steps;

  // 1.8e14 (1 + log m) and 3e14 log(delta) (1 + log m)
  CertifiedReal n_bound(const CertifiedReal& m) const;
  CertifiedReal m_bound(const CertifiedReal& m) const;
  bool all_certified() const;
};

// For X_n = T_m with m > 100: n < 1.8e14 (1 + log m) and
// m < 3e14 log(delta) (1 + log m). Requires delta >= 1 + sqrt 2.
LemmaPrel derive_lemma_prel(const CertifiedReal& delta, const PrecisionPolicy& policy = {});

struct DerivedBounds {
  CertifiedReal matveev_constant;
  mpq_class matveev_printed;
  mpq_class lemma_prel_n_coeff;
  mpq_class lemma_prel_m_coeff;
  CertifiedReal lmn_constant;
  mpq_class lmn_printed;
  mpz_class case_split_n2;     // n2 <= 476 when log(2 n2) + 0.14 <= 7
  mpz_class case_split_m1;     // printed 28444
  mpz_class case_m1_reading12; // floor of the bound with log(12 * 476)
  mpz_class case_m1_reading18; // same with log(18 * 476)
  mpq_class m1_coeff;          // 583
  mpq_class logdelta_coeff;    // 356
  mpz_class m2_implicit;       // solve_implicit(3e14 * 356, 3)
  mpz_class m1_final;          // 835000
  mpz_class n2_final;          // 10^16
  mpz_class m2_final;          // 1.6e22
  std::vector<ChainStep> steps;

  bool all_certified() const;
};

// Runs the whole chain from the Matveev and LMN applications to the final
// triple (m1, n2, m2) < (835000, 1e16, 1.6e22). Each printed constant is
// checked to dominate its recomputed value; failures are recorded in
// `steps`, never dropped.
DerivedBounds derive_lemma_jb0(const PrecisionPolicy& policy = {});

}  // namespace pelltrib
