#include "pelltrib/pell.hpp"

#include <iterator>
#include <map>
#include <optional>
#include <string>

#include "pelltrib/tribonacci.hpp"

namespace pelltrib {

FundamentalSolution fundamental(const mpz_class& d) {
  if (d < 2) throw DomainError("fundamental: d must be >= 2, got " + d.get_str());
  if (mpz_perfect_square_p(d.get_mpz_t())) {
    throw DomainError("fundamental: d = " + d.get_str() + " is a perfect square");
  }
  mpz_class a0;
  mpz_sqrt(a0.get_mpz_t(), d.get_mpz_t());

  // sqrt(d) = [a0; a1, a2, ...] with complete quotients (m + sqrt d) / q.
  mpz_class m = 0, q = 1, a = a0;
  mpz_class p_prev = 1, p = a0;
  mpz_class y_prev = 0, y = 1;
  for (;;) {
    const mpz_class norm = p * p - d * y * y;
    if (norm == 1 || norm == -1) {
      FundamentalSolution f;
      f.d = d;
      f.x1 = p;
      f.y1 = y;
      f.epsilon = norm == 1 ? 1 : -1;
      f.delta = CertifiedReal::from_integer(p) +
                CertifiedReal::from_integer(y) * sqrt(CertifiedReal::from_integer(d));
      return f;
    }
    m = q * a - m;
    q = (d - m * m) / q;
    a = (a0 + m) / q;
    mpz_class p_next = a * p + p_prev;
    mpz_class y_next = a * y + y_prev;
    p_prev = std::move(p);
    p = std::move(p_next);
    y_prev = std::move(y);
    y = std::move(y_next);
  }
}

CertifiedReal delta_from_x1(const mpz_class& x1, int epsilon) {
  const mpz_class disc = x1 * x1 - epsilon;
  if (disc <= 0) {
    throw DomainError("delta_from_x1: x1^2 - epsilon must be positive (x1 = " + x1.get_str() + ")");
  }
  return CertifiedReal::from_integer(x1) + sqrt(CertifiedReal::from_integer(disc));
}

namespace {

void check_epsilon(int epsilon) {
  if (epsilon != 1 && epsilon != -1) throw DomainError("epsilon must be +1 or -1");
}

// u_0 = 1, u_1 = x, u_(k+1) = 2x u_k - eps u_(k-1)
mpz_class chebyshev_like(std::size_t n, const mpz_class& x, int epsilon) {
  if (n == 0) return 1;
  mpz_class prev = 1, cur = x;
  const mpz_class two_x = 2 * x;
  for (std::size_t k = 1; k < n; ++k) {
    mpz_class next = two_x * cur - epsilon * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

}  // namespace

mpz_class x_coordinate(const FundamentalSolution& fund, std::size_t n) {
  check_epsilon(fund.epsilon);
  return chebyshev_like(n, fund.x1, fund.epsilon);
}

std::pair<mpz_class, mpz_class> pell_solution(const FundamentalSolution& fund, std::size_t n) {
  check_epsilon(fund.epsilon);
  if (n == 0) return {1, 0};
  mpz_class x_prev = 1, x = fund.x1, y_prev = 0, y = fund.y1;
  const mpz_class two_x1 = 2 * fund.x1;
  for (std::size_t k = 1; k < n; ++k) {
    mpz_class x_next = two_x1 * x - fund.epsilon * x_prev;
    mpz_class y_next = two_x1 * y - fund.epsilon * y_prev;
    x_prev = std::move(x);
    x = std::move(x_next);
    y_prev = std::move(y);
    y = std::move(y_next);
  }
  return {x, y};
}

std::vector<mpz_class> x_coordinates_up_to(const mpz_class& x1, int epsilon,
                                           const mpz_class& limit) {
  check_epsilon(epsilon);
  if (x1 < 1) throw DomainError("x_coordinates_up_to: x1 must be positive");
  std::vector<mpz_class> out;
  mpz_class prev = 1, cur = x1;
  const mpz_class two_x1 = 2 * x1;
  while (cur <= limit) {
    out.push_back(cur);
    mpz_class next = two_x1 * cur - epsilon * prev;
    if (next <= cur) {
      // only X_1 = 1 with epsilon = -1 can stall, and it does not: 1, 3, 7, ...
      throw Discrepancy("X-coordinate sequence is not increasing for x1 = " + x1.get_str());
    }
    prev = std::move(cur);
    cur = std::move(next);
  }
  return out;
}

mpz_class p_plus(std::size_t n, const mpz_class& x) { return chebyshev_like(n, x, 1); }
mpz_class p_minus(std::size_t n, const mpz_class& x) { return chebyshev_like(n, x, -1); }

mpz_class p_eps(int epsilon, std::size_t n, const mpz_class& x) {
  check_epsilon(epsilon);
  return chebyshev_like(n, x, epsilon);
}

// ---------------------------------------------------------------------------
// Squarefree decomposition

namespace {

std::vector<std::uint32_t> primes_up_to(std::uint64_t limit) {
  std::vector<bool> composite(limit + 1, false);
  std::vector<std::uint32_t> primes;
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return primes;
}

// Brent's variant of Pollard rho with f(x) = x^2 + c. Consumes `budget`.
std::optional<mpz_class> brent_rho(const mpz_class& n, std::uint64_t c, std::uint64_t& budget) {
  const std::uint64_t batch = 128;
  mpz_class y = 2, x, ys, q = 1, g = 1, diff;
  std::uint64_t r = 1;
  auto step = [&](mpz_class& v) {
    v = v * v + c;
    mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
  };
  while (g == 1) {
    x = y;
    for (std::uint64_t i = 0; i < r; ++i) step(y);
    for (std::uint64_t k = 0; k < r && g == 1; k += batch) {
      ys = y;
      const std::uint64_t count = std::min(batch, r - k);
      if (budget < count) return std::nullopt;
      budget -= count;
      for (std::uint64_t i = 0; i < count; ++i) {
        step(y);
        diff = x - y;
        q *= abs(diff);
        mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      }
      mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
    }
    r *= 2;
  }
  if (g == n) {
    do {
      step(ys);
      diff = x - ys;
      diff = abs(diff);
      mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    } while (g == 1);
  }
  if (g == n) return std::nullopt;
  return g;
}

struct Factorization {
  std::map<mpz_class, unsigned long> primes;
  std::vector<mpz_class> stubborn;  // composites left unsplit
};

void split(const mpz_class& n, Factorization& out, std::uint64_t& budget, std::uint64_t seed,
           unsigned long multiplicity) {
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 30) > 0) {
    out.primes[n] += multiplicity;
    return;
  }
  if (mpz_perfect_square_p(n.get_mpz_t())) {
    mpz_class s;
    mpz_sqrt(s.get_mpz_t(), n.get_mpz_t());
    split(s, out, budget, seed, multiplicity * 2);
    return;
  }
  for (std::uint64_t c = seed; budget > 0; ++c) {
    if (auto g = brent_rho(n, c, budget)) {
      split(*g, out, budget, seed, multiplicity);
      split(n / *g, out, budget, seed, multiplicity);
      return;
    }
  }
  for (unsigned long i = 0; i < multiplicity; ++i) out.stubborn.push_back(n);
}

}  // namespace

SqfreeDecomposition sqfree_decompose(const mpz_class& n, const FactoringEffort& effort) {
  if (n < 1) throw DomainError("sqfree_decompose: n must be positive");
  SqfreeDecomposition out;
  out.n = n;
  out.d = 1;
  out.y = 1;
  out.complete = true;

  mpz_class rest = n;
  Factorization f;
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), rest.get_mpz_t());
  const std::uint64_t limit =
      root.fits_ulong_p() ? std::min<std::uint64_t>(effort.trial_limit, root.get_ui())
                          : effort.trial_limit;
  for (std::uint32_t p : primes_up_to(limit)) {
    if (mpz_class(p) * p > rest) break;
    unsigned long e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++e;
    }
    if (e > 0) f.primes[mpz_class(p)] += e;
  }

  std::uint64_t budget = effort.rho_iterations;
  split(rest, f, budget, effort.rho_seed, 1);

  for (const auto& [p, e] : f.primes) {
    if (e % 2 == 1) out.d *= p;
    mpz_class power;
    mpz_pow_ui(power.get_mpz_t(), p.get_mpz_t(), e / 2);
    out.y *= power;
  }
  // A composite with no prime factor <= L and below L^3 is a product of two
  // distinct primes (squares were already split off), hence squarefree.
  mpz_class cube_bound = effort.trial_limit;
  cube_bound = cube_bound * cube_bound * cube_bound;
  std::map<mpz_class, unsigned long> stubborn_count;
  for (const auto& c : f.stubborn) ++stubborn_count[c];
  for (const auto& [c, e] : stubborn_count) {
    if (e % 2 == 1) out.d *= c;
    mpz_class power;
    mpz_pow_ui(power.get_mpz_t(), c.get_mpz_t(), e / 2);
    out.y *= power;
    if (e > 1 || !(c < cube_bound)) out.complete = false;
  }
  // Unsplit cofactors must also be coprime to each other and to every prime
  // found, otherwise a square may hide across them.
  for (auto it = stubborn_count.begin(); it != stubborn_count.end(); ++it) {
    for (auto jt = std::next(it); jt != stubborn_count.end(); ++jt) {
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), it->first.get_mpz_t(), jt->first.get_mpz_t());
      if (g != 1) out.complete = false;
    }
    for (const auto& [p, e] : f.primes) {
      if (mpz_divisible_p(it->first.get_mpz_t(), p.get_mpz_t())) out.complete = false;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

DeltaBoundsReport delta_bounds_check(const FundamentalSolution& fund, std::size_t n_max,
                                     const PrecisionPolicy& policy) {
  if (n_max < 1) throw DomainError("delta_bounds_check: n_max must be >= 1");
  const CertifiedReal& alpha = default_binet_constants().alpha;
  DeltaBoundsReport report;
  for (std::size_t n = 1; n <= n_max; ++n) {
    const CertifiedReal xn = CertifiedReal::from_integer(x_coordinate(fund, n));
    const CertifiedReal dn = pow(fund.delta, n);
    DeltaBoundRow row;
    row.n = n;
    row.lower_holds = certify_less_equal(dn / alpha, xn, policy);
    row.upper_holds = certify_less(xn, dn, policy);
    if (!row.upper_holds) {
      throw Discrepancy("X_n < delta^n fails at n = " + std::to_string(n) +
                        " for d = " + fund.d.get_str());
    }
    if (!row.lower_holds) report.lower_deviations.push_back(n);
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace pelltrib
