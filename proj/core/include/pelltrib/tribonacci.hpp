#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

#include "pelltrib/realnum.hpp"

namespace pelltrib {

// T_0 .. T_max, computed once by the recurrence.
class TribCache {
 public:
  explicit TribCache(std::size_t max_index);

  const mpz_class& operator[](std::size_t m) const;
  std::size_t max_index() const { return values_.size() - 1; }

  // Every m <= max_index() with T_m == value (T_1 = T_2 = 1 gives two).
  std::vector<std::size_t> indices_of(const mpz_class& value) const;

 private:
  std::vector<mpz_class> values_;
};

// Exact T_m, T_0 = 0, T_1 = T_2 = 1.
mpz_class trib(std::size_t m);

// Dominant root alpha of x^3 - x^2 - x - 1 and the quantities derived from
// it. Complex roots beta, gamma are only represented through their modulus
// |beta| = |gamma| = alpha^(-1/2).
struct BinetConstants {
  CertifiedReal alpha;
  CertifiedReal beta_abs;
  CertifiedReal a;  // alpha / (alpha^2 + 2 alpha + 3)
  CertifiedReal b_abs;
  CertifiedReal omega1;  // cbrt(19 + 3 sqrt 33)
  CertifiedReal omega2;  // cbrt(19 - 3 sqrt 33)
  CertifiedReal log_alpha;
  CertifiedReal chi;  // -log(2a) / log(alpha)
  CertifiedReal c1;   // 1 / log(alpha)
};

// alpha by Newton iteration seeded at 1.84, certified by a sign change of the
// cubic across the returned enclosure.
CertifiedReal alpha_newton();
// alpha = (1 + omega1 + omega2) / 3.
CertifiedReal alpha_radical();

// Builds the constants at policy.initial_bits and certifies the numeric
// brackets 1.83 < alpha < 1.84, 0.73 < |beta| < 0.74, 0.18 < a < 0.19,
// 0.35 < |b| < 0.36, plus agreement of the two alpha evaluations and of the
// two formulas for a. Any failure throws Discrepancy.
BinetConstants binet_constants(const PrecisionPolicy& policy = {});

// Constants at the default policy, built once.
const BinetConstants& default_binet_constants();

struct GrowthReport {
  std::size_t m_max = 0;
  std::size_t checked = 0;
};

// Certifies alpha^(m-2) <= T_m <= alpha^(m-1) for 2 <= m <= m_max. Throws
// Discrepancy naming the first m that fails.
GrowthReport check_growth_bounds(std::size_t m_max, const PrecisionPolicy& policy = {});

// Dominant Binet term for the indexing T_0 = 0, T_1 = T_2 = 1. With
// a = alpha/(alpha^2+2alpha+3) = 1/((alpha-beta)(alpha-gamma)) one has
// T_m = a alpha^(m+1) + b beta^(m+1) + c gamma^(m+1); the sum of r^m/f'(r)
// over the roots gives T_(m-1), not T_m.
CertifiedReal binet_dominant_term(std::size_t m);

// |T_m - a alpha^(m+1)|, bounded by 2 |b| |beta|^(m+1) < 1.
CertifiedReal binet_residual(std::size_t m);

}  // namespace pelltrib
