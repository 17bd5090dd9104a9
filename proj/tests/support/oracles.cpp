#include "oracles.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <sstream>

#include "pelltrib/contfrac.hpp"
#include "pelltrib/pell.hpp"
#include "pelltrib/realnum.hpp"
#include "pelltrib/reduction.hpp"
#include "pelltrib/tribonacci.hpp"

namespace pelltrib::oracle {

mpz_class trib(std::size_t m) {
  mpz_class a = 0, b = 1, c = 1;
  for (std::size_t i = 0; i < m; ++i) {
    mpz_class next = a + b + c;
    a = b;
    b = c;
    c = next;
  }
  return a;
}

mpz_class pell_x_binomial(int epsilon, std::size_t n, const mpz_class& x) {
  // sum over even k of C(n, k) x^(n-k) (x^2 - eps)^(k/2)
  const mpz_class s2 = x * x - epsilon;
  mpz_class total = 0, binom = 1, s2pow = 1;
  for (std::size_t k = 0; k <= n; ++k) {
    if (k > 0) {
      binom = binom * static_cast<unsigned long>(n - k + 1) / static_cast<unsigned long>(k);
    }
    if (k % 2 == 0) {
      mpz_class xp;
      mpz_pow_ui(xp.get_mpz_t(), x.get_mpz_t(), n - k);
      total += binom * xp * s2pow;
      s2pow *= s2;
    }
  }
  return total;
}

std::tuple<mpz_class, mpz_class, int> pell_fundamental_bruteforce(long d, long y_limit) {
  for (long y = 1; y <= y_limit; ++y) {
    const mpz_class dy2 = mpz_class(d) * y * y;
    for (int eps : {-1, 1}) {
      const mpz_class x2 = dy2 + eps;
      if (x2 > 0 && mpz_perfect_square_p(x2.get_mpz_t())) {
        mpz_class x;
        mpz_sqrt(x.get_mpz_t(), x2.get_mpz_t());
        return {x, mpz_class(y), eps};
      }
    }
  }
  return {0, 0, 0};
}

mpz_class squarefree_part(std::uint64_t n) {
  mpz_class d = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e % 2 == 1) d *= static_cast<unsigned long>(p);
  }
  return d * static_cast<unsigned long>(n);
}

std::vector<std::tuple<int, std::size_t, std::size_t, mpz_class>> small_solutions_bruteforce(
    std::size_t m_max, std::size_t n_max) {
  std::map<mpz_class, std::vector<std::size_t>> index;
  for (std::size_t m = 0; m <= m_max; ++m) index[trib(m)].push_back(m);
  const mpz_class top = trib(m_max);
  std::vector<std::tuple<int, std::size_t, std::size_t, mpz_class>> out;
  for (int eps : {1, -1}) {
    for (std::size_t n = 2; n <= n_max; ++n) {
      for (mpz_class x = (eps == 1 ? 2 : 1);; ++x) {
        const mpz_class v = pell_x_binomial(eps, n, x);
        if (v > top) break;
        auto it = index.find(v);
        if (it == index.end()) continue;
        for (std::size_t m : it->second) {
          if (m > n) out.emplace_back(eps, n, m, x);
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& l, const auto& r) {
    if (std::get<0>(l) != std::get<0>(r)) return std::get<0>(l) > std::get<0>(r);
    if (std::get<1>(l) != std::get<1>(r)) return std::get<1>(l) < std::get<1>(r);
    return std::get<2>(l) < std::get<2>(r);
  });
  return out;
}

mpq_class trib_poly(const mpq_class& x) { return x * x * x - x * x - x - 1; }

std::string PropertyResult::summary() const {
  std::ostringstream s;
  s << cases << " cases, " << violations << " violations";
  if (!first_violation.empty()) s << " (first: " << first_violation << ")";
  return s.str();
}

namespace {

void violate(PropertyResult& r, const std::string& what) {
  if (r.violations++ == 0) r.first_violation = what;
}

mpq_class random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-1000000000L, 1000000000L);
  std::uniform_int_distribution<long> den(1, 1000000);
  mpq_class q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

}  // namespace

PropertyResult enclosure_soundness(std::size_t cases, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> op(0, 5);
  std::uniform_int_distribution<long> prec(53, 600);
  PropertyResult r;
  for (std::size_t i = 0; i < cases; ++i) {
    const mpfr_prec_t p = prec(rng);
    mpq_class x = random_rational(rng), y = random_rational(rng), z = random_rational(rng);
    const Interval X = Interval::enclose(x, p), Y = Interval::enclose(y, p), Z = Interval::enclose(z, p);
    std::optional<Interval> got;
    mpq_class want;
    const int o = op(rng);
    switch (o) {
      case 0:
        got = ia::add(X, Y);
        want = x + y;
        break;
      case 1:
        got = ia::sub(X, Y);
        want = x - y;
        break;
      case 2:
        got = ia::mul(X, Y);
        want = x * y;
        break;
      case 3:
        if (y == 0) y = 1;
        got = ia::div(X, Interval::enclose(y, p));
        want = x / y;
        break;
      case 4:
        // (x - y) * z + x / (|z| + 1)
        got = ia::add(ia::mul(ia::sub(X, Y), Z),
                      ia::div(X, ia::add(ia::abs(Z), Interval::exact(1, p))));
        want = (x - y) * z + x / (abs(z) + 1);
        break;
      default: {
        // the same chain through CertifiedReal at precision p
        const CertifiedReal cx = CertifiedReal::from_rational(x), cy = CertifiedReal::from_rational(y),
                            cz = CertifiedReal::from_rational(z);
        got = ((cx * cy - cz) * (cx + cz)).at_bits(p).enclosure();
        want = (x * y - z) * (x + z);
        break;
      }
    }
    ++r.cases;
    if (!got->contains(want)) {
      violate(r, "op " + std::to_string(o) + " at " + std::to_string(p) + " bits: " + want.get_str() +
                     " not in " + got->describe(30));
    }
  }
  return r;
}

PropertyResult pell_identity(const std::vector<long>& ds, std::size_t n_max) {
  PropertyResult r;
  for (long d : ds) {
    const FundamentalSolution f = fundamental(d);
    for (std::size_t n = 1; n <= n_max; ++n) {
      const auto [x, y] = pell_solution(f, n);
      const int norm = (f.epsilon < 0 && n % 2 == 1) ? -1 : 1;
      ++r.cases;
      if (x * x - f.d * y * y != norm) {
        violate(r, "d = " + std::to_string(d) + ", n = " + std::to_string(n) + ": norm != eps^n");
      }
      if (x != pell_x_binomial(f.epsilon, n, f.x1) || x != x_coordinate(f, n)) {
        violate(r, "d = " + std::to_string(d) + ", n = " + std::to_string(n) + ": X_n disagrees");
      }
    }
  }
  return r;
}

PropertyResult cf_convergent_law() {
  PropertyResult r;
  const BinetConstants& bc = default_binet_constants();
  std::vector<std::pair<std::string, CertifiedReal>> targets = {
      {"chi", bc.chi},
      {"sqrt2", sqrt(CertifiedReal(2))},
      {"e", exp(CertifiedReal(1))},
      {"log 3", log(CertifiedReal(3))},
  };
  for (long d : {2, 3, 5, 6, 7, 10}) {
    targets.emplace_back("logdelta:" + std::to_string(d), log(fundamental(d).delta) / bc.log_alpha);
  }
  const mpz_class q_min("100000000000000000");
  for (const auto& [name, t] : targets) {
    const CFExpansion e = expand_until_q_exceeds(t, q_min);
    for (std::size_t k = 0; k < e.size(); ++k) {
      const Convergent& c = e.convergents[k];
      ++r.cases;
      const CertifiedReal gap = abs(t - CertifiedReal::from_rational(mpq_class(c.p, c.q)));
      const CertifiedReal bound = CertifiedReal::from_rational(mpq_class(1, c.q * c.q));
      bool holds = false;
      try {
        holds = certify_less(gap, bound);
      } catch (const InsufficientPrecision&) {
      }
      if (!holds) violate(r, name + " convergent " + std::to_string(k));
    }
  }
  return r;
}

namespace {

std::string random_decimal(std::mt19937_64& rng, int int_digits, int frac_digits) {
  std::uniform_int_distribution<int> digit(0, 9);
  std::string s;
  for (int i = 0; i < int_digits; ++i) s.push_back(static_cast<char>('0' + digit(rng)));
  s.push_back('.');
  for (int i = 0; i < frac_digits; ++i) s.push_back(static_cast<char>('0' + digit(rng)));
  return s;
}

}  // namespace

ToyReductionResult toy_reductions(std::size_t wanted, std::uint64_t seed, long m_max) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> M_dist(1, m_max);
  std::uniform_int_distribution<int> a_dist(5, 200), b_dist(120, 500);
  ToyReductionResult r;
  while (r.cases < wanted && r.attempted < 20 * wanted) {
    ++r.attempted;
    const std::string ks = random_decimal(rng, 1, 40), ms = random_decimal(rng, 1, 40);
    const std::string As = std::to_string(a_dist(rng)) + "e-1", Bs = std::to_string(b_dist(rng)) + "e-2";
    ReductionInstance in;
    in.kappa = CertifiedReal::from_decimal(ks);
    in.mu = CertifiedReal::from_decimal(ms);
    in.M = M_dist(rng);
    in.A = CertifiedReal::from_decimal(As);
    in.B = CertifiedReal::from_decimal(Bs);
    ReductionOutcome out;
    try {
      out = reduce(in, 16);
    } catch (const ReductionFailed&) {
      ++r.failed_reductions;
      continue;
    }
    ++r.cases;
    // every m <= M and every n near m kappa + mu must miss A B^-k for all
    // k >= k_bound, i.e. |m kappa - n + mu| B^k_bound >= A when nonzero
    const mpq_class kappa = parse_decimal(ks), mu = parse_decimal(ms), A = parse_decimal(As),
                    B = parse_decimal(Bs);
    mpq_class Bk = 1;
    for (mpz_class i = 0; i < out.k_bound; ++i) Bk *= B;
    for (long m = 0; m <= in.M.get_si(); ++m) {
      const mpq_class x = kappa * m + mu;
      mpz_class n0;
      mpz_fdiv_q(n0.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
      for (int dn = -1; dn <= 2; ++dn) {
        const mpq_class v = abs(x - mpq_class(n0 + dn));
        if (v == 0) continue;
        if (v * Bk < A) {
          violate(r, "kappa " + ks + " mu " + ms + " M " + in.M.get_str() + ": m = " + std::to_string(m) +
                         " reaches k = " + out.k_bound.get_str());
        }
      }
    }
  }
  return r;
}

}  // namespace pelltrib::oracle
