#include "pelltrib/contfrac.hpp"

#include <functional>
#include <string>

namespace pelltrib {

namespace {

// Complete quotient of one enclosure endpoint, kept as num/den with den > 0.
struct Ratio {
  mpz_class num;
  mpz_class den;
  bool exhausted = false;
};

Ratio ratio_of(const BigFloat& f) {
  const mpq_class q = f.to_rational();
  return Ratio{q.get_num(), q.get_den(), false};
}

mpz_class floor_of(const Ratio& r) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), r.num.get_mpz_t(), r.den.get_mpz_t());
  return f;
}

// x <- 1 / (x - a)
void advance(Ratio& r, const mpz_class& a) {
  mpz_class rem = r.num - a * r.den;
  if (rem == 0) {
    r.exhausted = true;
    return;
  }
  r.num = std::move(r.den);
  r.den = std::move(rem);
  if (r.den < 0) {
    r.num = -r.num;
    r.den = -r.den;
  }
}

// Certified quotients from one enclosure: the two endpoints run Euclid in
// lockstep and a quotient is kept while their floors coincide. Stops early
// when `enough` says so.
std::vector<mpz_class> lockstep(const Interval& x,
                                const std::function<bool(const std::vector<mpz_class>&)>& enough) {
  Ratio lo = ratio_of(x.lo()), hi = ratio_of(x.hi());
  std::vector<mpz_class> out;
  while (!enough(out)) {
    if (lo.exhausted || hi.exhausted) break;
    const mpz_class a = floor_of(lo);
    if (a != floor_of(hi)) break;
    if (!out.empty() && a < 1) break;
    out.push_back(a);
    advance(lo, a);
    advance(hi, a);
  }
  return out;
}

CFExpansion expand(const CertifiedReal& target, const PrecisionPolicy& policy,
                   const std::function<bool(const std::vector<mpz_class>&)>& enough,
                   const std::string& goal) {
  policy.validate();
  if (const mpq_class* q = target.exact_value()) {
    // enclosures can never settle the last quotient of a rational, so run Euclid on it
    Ratio r{q->get_num(), q->get_den(), false};
    std::vector<mpz_class> qs;
    while (!enough(qs) && !r.exhausted) {
      qs.push_back(floor_of(r));
      advance(r, qs.back());
    }
    if (!enough(qs)) {
      throw DomainError("continued fraction of rational " + q->get_str() + " ends after " +
                        std::to_string(qs.size()) + " quotients before " + goal);
    }
    CFExpansion out{target, std::move(qs), {}};
    out.convergents = convergents_of(out.quotients);
    return out;
  }
  std::vector<mpz_class> previous;
  for (mpfr_prec_t p : policy.ladder()) {
    const CertifiedReal t = target.at_bits(p);
    std::vector<mpz_class> qs = lockstep(t.enclosure(), enough);
    // certified quotients cannot change under refinement
    const std::size_t common = std::min(previous.size(), qs.size());
    for (std::size_t i = 0; i < common; ++i) {
      if (qs[i] != previous[i]) {
        throw Discrepancy("continued fraction quotient a_" + std::to_string(i) +
                          " changed under refinement");
      }
    }
    if (enough(qs)) {
      CFExpansion out{t, std::move(qs), {}};
      out.convergents = convergents_of(out.quotients);
      return out;
    }
    if (qs.size() > previous.size()) previous = std::move(qs);
  }
  throw InsufficientPrecision("continued fraction of " + target.label() + " stalls after " +
                              std::to_string(previous.size()) + " quotients before " + goal +
                              " at " + std::to_string(policy.max_bits) + " bits");
}

}  // namespace

std::vector<Convergent> convergents_of(const std::vector<mpz_class>& quotients) {
  std::vector<Convergent> out;
  out.reserve(quotients.size());
  mpz_class p2 = 0, q2 = 1, p1 = 1, q1 = 0;
  for (const auto& a : quotients) {
    mpz_class p = a * p1 + p2;
    mpz_class q = a * q1 + q2;
    p2 = std::move(p1);
    q2 = std::move(q1);
    p1 = p;
    q1 = q;
    out.push_back({std::move(p), std::move(q)});
  }
  return out;
}

CFExpansion expand_until_q_exceeds(const CertifiedReal& target, const mpz_class& q_min,
                                   const PrecisionPolicy& policy) {
  auto enough = [&q_min](const std::vector<mpz_class>& qs) {
    // only the denominators are needed here
    mpz_class q2 = 1, q1 = 0;
    for (const auto& a : qs) {
      mpz_class q = a * q1 + q2;
      q2 = std::move(q1);
      q1 = std::move(q);
    }
    return !qs.empty() && q1 > q_min;
  };
  return expand(target, policy, enough, "q > " + q_min.get_str());
}

CFExpansion expand_terms(const CertifiedReal& target, std::size_t terms,
                         const PrecisionPolicy& policy) {
  auto enough = [terms](const std::vector<mpz_class>& qs) { return qs.size() >= terms; };
  return expand(target, policy, enough, std::to_string(terms) + " terms");
}

MaxQuotient max_partial_quotient(const CFExpansion& exp, std::size_t k_max) {
  if (exp.quotients.size() < k_max + 1) {
    throw DomainError("max_partial_quotient: expansion has " +
                      std::to_string(exp.quotients.size()) + " quotients, need " +
                      std::to_string(k_max + 1));
  }
  MaxQuotient best{exp.quotients[0], 0};
  for (std::size_t i = 1; i <= k_max; ++i) {
    if (exp.quotients[i] > best.value) best = {exp.quotients[i], i};
  }
  return best;
}

ApproxBound approx_lower_bound(const CFExpansion& exp, const mpz_class& x_max) {
  if (x_max < 1) throw DomainError("approx_lower_bound: x_max must be >= 1");
  const auto& cv = exp.convergents;
  if (cv.empty() || !(x_max < cv.back().q)) {
    throw DomainError("approx_lower_bound: x_max = " + x_max.get_str() +
                      " needs a deeper expansion (last denominator " +
                      (cv.empty() ? std::string("none") : cv.back().q.get_str()) + ")");
  }
  std::size_t K = 0;
  while (K + 1 < cv.size() && cv[K + 1].q <= x_max) ++K;
  ApproxBound out;
  out.K = K;
  out.a_max = max_partial_quotient(exp, K + 1);
  out.c = mpq_class(1, 1) / mpq_class(out.a_max.value + 2);
  out.c.canonicalize();
  return out;
}

bool legendre_check(const mpz_class& x, const mpz_class& y, const CFExpansion& exp) {
  if (x < 1) throw DomainError("legendre_check: x must be >= 1");
  mpq_class r(y, x);
  r.canonicalize();
  for (const auto& c : exp.convergents) {
    if (c.q == r.get_den() && c.p == r.get_num()) return true;
  }
  return false;
}

}  // namespace pelltrib
