#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pelltrib/contfrac.hpp"
#include "pelltrib/lfl_bounds.hpp"
#include "pelltrib/pell.hpp"
#include "pelltrib/realnum.hpp"
#include "pelltrib/reduction.hpp"

namespace pelltrib {

struct SearchConfig {
  std::size_t m1_max = 100;
  std::size_t n1_max = 69;
  std::size_t m2_check_max = 100;
  mpz_class M_reduction{"10000000000000000"};
  std::string A = "14.8";
  std::string B = "2.4";
  std::size_t convergent_budget = 16;
  unsigned jobs = 1;
  bool factor = true;  // annotate records with d; pair lists never depend on it
  FactoringEffort factoring;
  PrecisionPolicy policy;

  // Throws DomainError for zero ranges, jobs == 0 or M_reduction < 1.
  void validate() const;
};

// P^eps_n(X) = T_m with n >= 2.
struct SmallSolution {
  int epsilon = 1;
  std::size_t n1 = 0;
  std::size_t m1 = 0;
  mpz_class X1;

  friend bool operator==(const SmallSolution&, const SmallSolution&) = default;
};

// Every X >= 1 with P^eps_n(X) = T_m for 2 <= n <= n1_max, n < m <= m1_max,
// found by integer bisection on the strictly increasing P^eps_n. X = 1 with
// eps = +1 is not a Pell solution and is left out. Sorted by (eps desc, n, m).
std::vector<SmallSolution> solve_small(const SearchConfig& config);

// The positive X with P^eps_n(X) == target, if any. Searches 1 <= X <=
// floor((2 target)^(1/n)) + 1, since P^eps_n(X) >= X^n / 2.
std::optional<mpz_class> solve_p_eps(int epsilon, std::size_t n, const mpz_class& target);

struct SolutionRecord {
  int epsilon = 1;
  mpz_class X1;
  std::optional<mpz_class> d;  // empty when factoring was incomplete or off
  std::optional<mpz_class> Y1;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;  // (n, m), X_n = T_m
};

// Pairs (n, m) with X_n = T_m and m <= m_max, X_n generated from X1 alone.
std::vector<std::pair<std::size_t, std::size_t>> membership_pairs(const mpz_class& x1, int epsilon,
                                                                  std::size_t m_max);

// Bound on m2 that does not go through Baker-Davenport. The known solution
// (1, m1) gives lambda1 = kappa - m1 + chi - 1, tiny but fixed; a second one
// (n2, m2) then has |(n2 - 1) kappa - (m2 - m1)| < A B^-m2 + |lambda1|, and
// the continued fraction of kappa bounds the left side below by c / x_max.
struct HomogeneousBound {
  CertifiedReal lambda1;
  mpq_class c;
  MaxQuotient a_max;
  CertifiedReal m2_bound;  // log(A / (c / x_max - |lambda1|)) / log B
  mpz_class max_m2;        // floor of the upper endpoint
};

// Throws DomainError when c / x_max does not dominate |lambda1|.
HomogeneousBound homogeneous_bound(const mpz_class& x1, int epsilon, std::size_t m1,
                                   const SearchConfig& config);

struct TrivialInstance {
  int epsilon = 1;
  std::size_t m1 = 0;
  mpz_class T;
  // "ok" (Baker-Davenport), "ok-homogeneous" (fallback), "skipped",
  // "reduction-incomplete", "bound-exceeds-window"
  std::string status;
  std::string note;
  std::optional<ReductionOutcome> reduction;
  std::optional<HomogeneousBound> homogeneous;
  SolutionRecord record;
};

struct TrivialSweep {
  std::vector<TrivialInstance> instances;  // ordered by (eps desc, m1)
  std::size_t completed() const;
  std::size_t flagged() const;
  std::size_t count(const std::string& status) const;
};

// n1 = 1, X1 = T_m1 for each eps and 1 <= m1 <= m1_max: Baker-Davenport with
// kappa = log(delta)/log(alpha), mu = chi bounds m2, then the X-coordinates
// up to T_(m2_check_max) are matched against the Tribonacci numbers. When
// the reduction cannot close an instance (it never can once m1 is past its
// own k bound, since (1, m1) solves the same inequality) the homogeneous
// bound is tried before the instance is flagged.
TrivialSweep trivial_case_sweep(const SearchConfig& config);

// floor of the upper endpoint of m1 log(alpha) / log(delta), from
// n c1 log(delta) <= m.
mpz_class n1_bound_from_m1(const mpz_class& m1, const CertifiedReal& delta,
                           const PrecisionPolicy& policy = {});

struct CutoffReport {
  mpz_class x_max;          // n2 - n1 < n2 < x_max
  mpq_class c;              // approximation constant 1/(a_max + 2)
  MaxQuotient a_max;
  std::size_t K = 0;
  CertifiedReal m1_bound;   // (2/3) log(18 x_max^2 / (c log alpha)) / log alpha
  mpz_class cutoff;         // floor of the bound's upper endpoint
  std::vector<ChainStep> steps;
  bool all_certified() const;
};

// From 1/(24 n2) < 18 n2 / (alpha^(3 m1/2) log alpha) and n2 < 1e16. The
// overload takes c directly, e.g. 1/102 for a hypothetical a_max = 100.
CutoffReport m1_cutoff_via_cf(const PrecisionPolicy& policy = {});
CutoffReport m1_cutoff_via_cf(const mpq_class& c, const PrecisionPolicy& policy = {});

struct NontrivialCase {
  SmallSolution solution;
  ReductionOutcome reduction;
  SolutionRecord record;
};

struct TheoremReport {
  DerivedBounds bounds;
  CutoffReport cutoff;
  mpz_class n1_bound;
  std::vector<SmallSolution> small;
  std::vector<NontrivialCase> nontrivial;
  TrivialSweep sweep;
  std::vector<SolutionRecord> records;      // merged by (eps, X1), only those with >= 2 pairs
  std::vector<std::string> notes;
  bool matches_theorem = false;
};

// Records with at least two pairs; equality with the expected exceptional
// set {eps = +1, X1 = 2: (1,3),(2,5)} and {eps = -1, X1 = 1: (1,1),(1,2),(3,5)}.
bool is_expected_exceptional_set(const std::vector<SolutionRecord>& records);

TheoremReport verify_theorem(const SearchConfig& config);

}  // namespace pelltrib
