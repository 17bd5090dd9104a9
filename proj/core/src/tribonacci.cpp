#include "pelltrib/tribonacci.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace pelltrib {

TribCache::TribCache(std::size_t max_index) {
  values_.reserve(max_index + 3);
  values_.emplace_back(0);
  values_.emplace_back(1);
  values_.emplace_back(1);
  for (std::size_t m = 3; m <= max_index; ++m) {
    values_.push_back(values_[m - 1] + values_[m - 2] + values_[m - 3]);
  }
  values_.resize(max_index + 1);
}

const mpz_class& TribCache::operator[](std::size_t m) const {
  if (m >= values_.size()) {
    throw DomainError("TribCache: index " + std::to_string(m) + " beyond cached range " +
                      std::to_string(max_index()));
  }
  return values_[m];
}

std::vector<std::size_t> TribCache::indices_of(const mpz_class& value) const {
  std::vector<std::size_t> out;
  for (std::size_t m = 0; m < values_.size(); ++m) {
    if (values_[m] == value) out.push_back(m);
    if (values_[m] > value && m > 2) break;
  }
  return out;
}

mpz_class trib(std::size_t m) {
  mpz_class t0 = 0, t1 = 1, t2 = 1;
  if (m == 0) return t0;
  for (std::size_t i = 0; i + 1 < m; ++i) {
    mpz_class next = t0 + t1 + t2;
    t0 = std::move(t1);
    t1 = std::move(t2);
    t2 = std::move(next);
  }
  return t1;
}

namespace {

Interval point(const BigFloat& v) { return Interval(v, v); }

// x^3 - x^2 - x - 1 in Horner form
Interval cubic(const Interval& x) {
  const Interval one = Interval::exact(1, x.precision());
  Interval acc = ia::sub(x, one);
  acc = ia::sub(ia::mul(acc, x), one);
  return ia::sub(ia::mul(acc, x), one);
}

Interval alpha_enclosure(mpfr_prec_t prec) {
  const mpfr_prec_t work = prec + 32;
  BigFloat x(work), f(work), df(work), t(work);
  mpfr_set_d(x.get(), 1.84, MPFR_RNDN);
  const int iterations = static_cast<int>(std::ceil(std::log2(static_cast<double>(work)))) + 4;
  for (int i = 0; i < iterations; ++i) {
    // f = ((x - 1) x - 1) x - 1, f' = (3x - 2) x - 1
    mpfr_sub_ui(f.get(), x.get(), 1, MPFR_RNDN);
    mpfr_mul(f.get(), f.get(), x.get(), MPFR_RNDN);
    mpfr_sub_ui(f.get(), f.get(), 1, MPFR_RNDN);
    mpfr_mul(f.get(), f.get(), x.get(), MPFR_RNDN);
    mpfr_sub_ui(f.get(), f.get(), 1, MPFR_RNDN);
    mpfr_mul_ui(df.get(), x.get(), 3, MPFR_RNDN);
    mpfr_sub_ui(df.get(), df.get(), 2, MPFR_RNDN);
    mpfr_mul(df.get(), df.get(), x.get(), MPFR_RNDN);
    mpfr_sub_ui(df.get(), df.get(), 1, MPFR_RNDN);
    mpfr_div(t.get(), f.get(), df.get(), MPFR_RNDN);
    mpfr_sub(x.get(), x.get(), t.get(), MPFR_RNDN);
  }

  // The cubic is increasing for x > 1 and has a single real root, so a sign
  // change across [lo, hi] encloses alpha.
  for (long slack = 2; slack < prec; slack += 8) {
    BigFloat lo(prec), hi(prec), r(work);
    mpfr_set_ui_2exp(r.get(), 1, -static_cast<mpfr_exp_t>(prec - slack), MPFR_RNDU);
    mpfr_sub(lo.get(), x.get(), r.get(), MPFR_RNDD);
    mpfr_add(hi.get(), x.get(), r.get(), MPFR_RNDU);
    if (mpfr_cmp_ui(lo.get(), 1) <= 0) break;
    if (cubic(point(lo)).is_negative() && cubic(point(hi)).is_positive()) {
      return Interval(std::move(lo), std::move(hi));
    }
  }
  throw Discrepancy("Newton iteration for alpha failed to certify a root bracket");
}

CertifiedReal constant(const char* text) { return CertifiedReal::from_decimal(text); }

void require_between(const CertifiedReal& x, const char* lo, const char* hi, const char* name,
                     const PrecisionPolicy& policy) {
  if (!certify_less(constant(lo), x, policy) || !certify_less(x, constant(hi), policy)) {
    throw Discrepancy(std::string("bracket ") + lo + " < " + name + " < " + hi +
                      " failed: " + x.enclosure().describe());
  }
}

void require_overlap(const CertifiedReal& x, const CertifiedReal& y, const char* what) {
  const Interval& a = x.enclosure();
  const Interval& b = y.enclosure();
  if (mpfr_less_p(a.hi().get(), b.lo().get()) || mpfr_less_p(b.hi().get(), a.lo().get())) {
    throw Discrepancy(std::string(what) + ": independent evaluations disagree, " + a.describe() +
                      " vs " + b.describe());
  }
}

}  // namespace

CertifiedReal alpha_newton() {
  return CertifiedReal::from_evaluator("alpha", &alpha_enclosure);
}

CertifiedReal alpha_radical() {
  const CertifiedReal root33 = sqrt(CertifiedReal(33));
  const CertifiedReal w1 = cbrt(CertifiedReal(19) + CertifiedReal(3) * root33);
  const CertifiedReal w2 = cbrt(CertifiedReal(19) - CertifiedReal(3) * root33);
  return (CertifiedReal(1) + w1 + w2) / CertifiedReal(3);
}

BinetConstants binet_constants(const PrecisionPolicy& policy) {
  policy.validate();
  const mpfr_prec_t p = policy.initial_bits;
  const CertifiedReal one(1), two(2), three(3);

  BinetConstants c;
  c.alpha = alpha_newton().at_bits(p);
  const CertifiedReal root33 = sqrt(CertifiedReal(33));
  c.omega1 = cbrt(CertifiedReal(19) + three * root33).at_bits(p);
  c.omega2 = cbrt(CertifiedReal(19) - three * root33).at_bits(p);

  const CertifiedReal& al = c.alpha;
  c.beta_abs = one / sqrt(al);
  c.a = al / (al * al + two * al + three);

  // beta = re + i im with re = (1 - alpha)/2 (roots sum to 1) and
  // |beta|^2 = 1/alpha (roots multiply to 1).
  const CertifiedReal re = (one - al) / two;
  const CertifiedReal im = sqrt(one / al - re * re);
  const CertifiedReal re_gap = re - al;
  const CertifiedReal beta_minus_alpha = sqrt(re_gap * re_gap + im * im);
  c.b_abs = one / (beta_minus_alpha * (two * im));

  c.log_alpha = log(al);
  c.chi = -log(two * c.a) / c.log_alpha;
  c.c1 = one / c.log_alpha;

  require_overlap(c.alpha, alpha_radical().at_bits(p), "alpha");
  require_overlap(c.a, one / (three * al * al - two * al - one), "a");
  require_between(c.alpha, "1.83", "1.84", "alpha", policy);
  require_between(c.beta_abs, "0.73", "0.74", "|beta|", policy);
  require_between(c.a, "0.18", "0.19", "a", policy);
  require_between(c.b_abs, "0.35", "0.36", "|b|", policy);
  return c;
}

const BinetConstants& default_binet_constants() {
  static const BinetConstants constants = binet_constants();
  return constants;
}

GrowthReport check_growth_bounds(std::size_t m_max, const PrecisionPolicy& policy) {
  if (m_max < 2) throw DomainError("check_growth_bounds: m_max must be >= 2");
  const CertifiedReal& al = default_binet_constants().alpha;
  const TribCache t(m_max);
  GrowthReport report;
  report.m_max = m_max;
  for (std::size_t m = 2; m <= m_max; ++m) {
    const CertifiedReal tm = CertifiedReal::from_integer(t[m]);
    if (!certify_less_equal(pow(al, m - 2), tm, policy) ||
        !certify_less_equal(tm, pow(al, m - 1), policy)) {
      throw Discrepancy("alpha^(m-2) <= T_m <= alpha^(m-1) fails at m = " + std::to_string(m));
    }
    ++report.checked;
  }
  return report;
}

CertifiedReal binet_dominant_term(std::size_t m) {
  const BinetConstants& c = default_binet_constants();
  return c.a * pow(c.alpha, m + 1);
}

CertifiedReal binet_residual(std::size_t m) {
  if (m < 1) throw DomainError("binet_residual: m must be >= 1");
  return abs(CertifiedReal::from_integer(trib(m)) - binet_dominant_term(m));
}

}  // namespace pelltrib
