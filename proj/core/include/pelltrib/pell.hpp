#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "pelltrib/realnum.hpp"

namespace pelltrib {

// Minimal positive solution of X^2 - d Y^2 = epsilon, epsilon = +-1.
struct FundamentalSolution {
  mpz_class d;
  mpz_class x1;
  mpz_class y1;
  int epsilon = 1;
  CertifiedReal delta;  // x1 + y1 sqrt(d)
};

// Smallest solution of X^2 - dY^2 = +-1, read off the continued fraction of
// sqrt(d). Any non-square d >= 2 is accepted; throws DomainError otherwise.
FundamentalSolution fundamental(const mpz_class& d);

// delta = x1 + sqrt(x1^2 - epsilon), i.e. the unit built from an
// X-coordinate without knowing d.
CertifiedReal delta_from_x1(const mpz_class& x1, int epsilon);

// X_n by X_0 = 1, X_(n+1) = 2 X_1 X_n - epsilon X_(n-1).
mpz_class x_coordinate(const FundamentalSolution& fund, std::size_t n);
// (X_n, Y_n); Y follows the same recurrence from Y_0 = 0.
std::pair<mpz_class, mpz_class> pell_solution(const FundamentalSolution& fund, std::size_t n);

// X_1, X_2, ... while X_n <= limit, seeded only by X_1 and epsilon.
std::vector<mpz_class> x_coordinates_up_to(const mpz_class& x1, int epsilon,
                                           const mpz_class& limit);

// P+_n(x) = ((x + sqrt(x^2-1))^n + (x - sqrt(x^2-1))^n) / 2 and
// P-_n(x) = ((x + sqrt(x^2+1))^n + (x - sqrt(x^2+1))^n) / 2, evaluated by
// u_0 = 1, u_1 = x, u_(k+1) = 2x u_k -+ u_(k-1).
mpz_class p_plus(std::size_t n, const mpz_class& x);
mpz_class p_minus(std::size_t n, const mpz_class& x);
// epsilon = +1 selects p_plus, -1 selects p_minus.
mpz_class p_eps(int epsilon, std::size_t n, const mpz_class& x);

struct FactoringEffort {
  std::uint64_t trial_limit = 1000000;
  std::uint64_t rho_iterations = 200000;  // total Pollard-Brent budget
  std::uint64_t rho_seed = 1;             // fixed nonce for reproducibility
};

struct SqfreeDecomposition {
  mpz_class n;
  mpz_class d;  // squarefree part when complete
  mpz_class y;  // n = d * y^2
  bool complete = false;
};

// n = d y^2 by trial division, then Pollard-Brent rho within the budget.
// Cofactors that resist factoring stay inside d and clear `complete`.
SqfreeDecomposition sqfree_decompose(const mpz_class& n, const FactoringEffort& effort = {});

struct DeltaBoundRow {
  std::size_t n = 0;
  bool lower_holds = false;  // delta^n / alpha <= X_n
  bool upper_holds = false;  // X_n < delta^n
};

struct DeltaBoundsReport {
  std::vector<DeltaBoundRow> rows;
  std::vector<std::size_t> lower_deviations;
};

// Evaluates delta^n/alpha <= X_n < delta^n for 1 <= n <= n_max. The upper
// inequality always holds and a failure throws Discrepancy; the lower one is
// reported row by row, since it fails for small n and small delta.
DeltaBoundsReport delta_bounds_check(const FundamentalSolution& fund, std::size_t n_max,
                                     const PrecisionPolicy& policy = {});

}  // namespace pelltrib
