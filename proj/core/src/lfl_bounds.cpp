#include "pelltrib/lfl_bounds.hpp"

#include <string>
#include <utility>

#include "pelltrib/tribonacci.hpp"

namespace pelltrib {

namespace {

CertifiedReal dec(const char* text) { return CertifiedReal::from_decimal(text); }

// l^4.5 = l^4 sqrt(l)
CertifiedReal pow_four_and_half(unsigned l) {
  const CertifiedReal x(l);
  return pow(x, 4) * sqrt(x);
}

ChainStep check(std::string id, std::string claim, const CertifiedReal& lhs,
                const CertifiedReal& rhs, bool strict, const PrecisionPolicy& policy) {
  ChainStep s{std::move(id), std::move(claim), lhs.to_decimal(15), false};
  try {
    s.certified = strict ? certify_less(lhs, rhs, policy) : certify_less_equal(lhs, rhs, policy);
  } catch (const InsufficientPrecision&) {
    s.certified = false;
  }
  return s;
}

ChainStep record(std::string id, std::string claim, std::string value, bool ok) {
  return ChainStep{std::move(id), std::move(claim), std::move(value), ok};
}

bool all_ok(const std::vector<ChainStep>& steps) {
  for (const auto& s : steps) {
    if (!s.certified) return false;
  }
  return true;
}

}  // namespace

void validate(const MatveevInput& in, const PrecisionPolicy& policy) {
  if (in.l < 1) throw DomainError("matveev: l must be >= 1");
  if (in.A.size() != in.l) {
    throw DomainError("matveev: expected " + std::to_string(in.l) + " heights, got " +
                      std::to_string(in.A.size()));
  }
  if (in.d_L < 1) throw DomainError("matveev: d_L must be >= 1");
  if (in.D < 3) throw DomainError("matveev: D must be >= 3");
  const CertifiedReal floor_a = dec("0.16");
  for (std::size_t j = 0; j < in.A.size(); ++j) {
    bool ok = false;
    try {
      ok = certify_less_equal(floor_a, in.A[j], policy);
    } catch (const InsufficientPrecision&) {
      ok = false;
    }
    if (!ok) throw DomainError("matveev: A_" + std::to_string(j + 1) + " must be >= 0.16");
  }
}

CertifiedReal matveev_constant(unsigned l, unsigned d_L, const std::vector<CertifiedReal>& A) {
  const CertifiedReal dl(d_L);
  CertifiedReal c = dec("1.4") * pow(CertifiedReal(30), l + 3) * pow_four_and_half(l) *
                    pow(dl, 2) * (CertifiedReal(1) + log(dl));
  for (const auto& a : A) c = c * a;
  return c;
}

CertifiedReal matveev_bound(const MatveevInput& in, const PrecisionPolicy& policy) {
  validate(in, policy);
  const CertifiedReal one_plus_log_d = CertifiedReal(1) + log(CertifiedReal::from_integer(in.D));
  return -(matveev_constant(in.l, in.d_L, in.A) * one_plus_log_d);
}

void validate(const LMNInput& in, const PrecisionPolicy& policy) {
  if (in.d_L < 1) throw DomainError("lmn: d_L must be >= 1");
  const CertifiedReal floor_b = CertifiedReal::from_rational(mpq_class(1, in.d_L));
  auto at_least = [&](const CertifiedReal& x) {
    try {
      return certify_less_equal(floor_b, x, policy);
    } catch (const InsufficientPrecision&) {
      return false;
    }
  };
  if (!at_least(in.logB1)) throw DomainError("lmn: log B1 must be >= 1/d_L");
  if (!at_least(in.logB2)) throw DomainError("lmn: log B2 must be >= 1/d_L");
  if (certify_sign(in.b_prime, policy) <= 0) throw DomainError("lmn: b' must be positive");
}

CertifiedReal lmn_max_term(const LMNInput& in, const PrecisionPolicy& policy) {
  validate(in, policy);
  const CertifiedReal t1 = log(in.b_prime) + dec("0.14");
  const CertifiedReal t2 = CertifiedReal::from_rational(mpq_class(21, in.d_L));
  const CertifiedReal t3 = CertifiedReal::from_rational(mpq_class(1, 2));
  // pick the largest certified term; fall back to the hull when undecidable
  auto larger = [&](const CertifiedReal& x, const CertifiedReal& y) {
    try {
      return certify_less(x, y, policy) ? y : x;
    } catch (const InsufficientPrecision&) {
      return CertifiedReal::lift("max", {x, y}, [](const std::vector<Interval>& v) {
        const mpfr_prec_t p = std::max(v[0].precision(), v[1].precision());
        BigFloat lo(p), hi(p);
        mpfr_max(lo.get(), v[0].lo().get(), v[1].lo().get(), MPFR_RNDD);
        mpfr_max(hi.get(), v[0].hi().get(), v[1].hi().get(), MPFR_RNDU);
        return Interval(std::move(lo), std::move(hi));
      });
    }
  };
  return larger(larger(t1, t2), t3);
}

CertifiedReal lmn_constant(const LMNInput& in) {
  return dec("24.34") * pow(CertifiedReal(in.d_L), 4) * in.logB1 * in.logB2;
}

CertifiedReal lmn_bound(const LMNInput& in, const PrecisionPolicy& policy) {
  const CertifiedReal m = lmn_max_term(in, policy);
  return -(lmn_constant(in) * m * m);
}

HeightParams weil_height_params(const PrecisionPolicy& policy) {
  const BinetConstants& bc = default_binet_constants();
  const CertifiedReal two(2), eleven(11);
  // 11X^3 + 4X - 2 has roots 2a, 2b, 2c; all inside the unit disc means
  // the Mahler measure is just the leading coefficient.
  const CertifiedReal r1 = two * bc.a;
  const CertifiedReal r23 = two * bc.b_abs;
  if (!certify_less(r1, CertifiedReal(1), policy) || !certify_less(r23, CertifiedReal(1), policy)) {
    throw Discrepancy("roots of 11X^3 + 4X - 2 are not all inside the unit disc");
  }
  HeightParams h;
  h.A1_coeff = CertifiedReal(3);
  h.h_two_a = log(eleven) / CertifiedReal(3);
  h.h_alpha = bc.log_alpha / CertifiedReal(3);
  h.A2 = CertifiedReal(6) * h.h_two_a;
  h.A3 = two * log(dec("1.84"));
  // A_j >= max(d_L h, |log eta|, 0.16)
  if (!certify_less_equal(abs(log(r1)), h.A2, policy) ||
      !certify_less(CertifiedReal(6) * h.h_alpha, h.A3, policy)) {
    throw Discrepancy("height parameters A2 or A3 do not dominate h'");
  }
  return h;
}

CertifiedReal A1_for(const CertifiedReal& delta) { return CertifiedReal(3) * log(delta); }

MatveevInput matveev_preset() {
  MatveevInput in;
  in.l = 3;
  in.d_L = 6;
  in.D = 3;
  in.A = {CertifiedReal(3), CertifiedReal(2) * log(CertifiedReal(11)),
          CertifiedReal(2) * log(dec("1.84"))};
  return in;
}

LMNInput lmn_preset(const CertifiedReal& b_prime) {
  LMNInput in;
  in.d_L = 3;
  in.logB1 = log(CertifiedReal(11)) / CertifiedReal(3);
  in.logB2 = CertifiedReal::from_rational(mpq_class(1, 3));
  in.b_prime = b_prime;
  return in;
}

mpz_class solve_implicit(const CertifiedReal& C, unsigned k, const PrecisionPolicy& policy) {
  if (k < 1) throw DomainError("solve_implicit: k must be >= 1");
  if (certify_sign(C, policy) <= 0) throw DomainError("solve_implicit: C must be positive");
  const CertifiedReal one(1);
  auto f = [&](const mpz_class& x) {
    return C * pow(one + log(CertifiedReal::from_integer(x)), k);
  };
  // start at or above e^(k-1) so that 1 + log x >= k holds from the outset
  mpz_class x = ceil_upper(C);
  const mpz_class e_floor = ceil_upper(exp(CertifiedReal(k - 1)));
  if (x < e_floor) x = e_floor;
  if (x < 1) x = 1;
  for (int iter = 0; iter < 10000; ++iter) {
    // ceil of the upper endpoint, so next <= x already certifies f(x) <= x
    const mpz_class next = ceil_upper(f(x));
    if (next <= x) {
      const CertifiedReal X = CertifiedReal::from_integer(x);
      if (k > 1 && !certify_less_equal(CertifiedReal(k), one + log(X), policy)) {
        throw Discrepancy("solve_implicit: crossover certificate failed at " + x.get_str());
      }
      return x;
    }
    x = next;
  }
  throw Discrepancy("solve_implicit: fixed-point iteration did not settle");
}

CertifiedReal LemmaPrel::n_bound(const CertifiedReal& m) const {
  return n_coeff * (CertifiedReal(1) + log(m));
}

CertifiedReal LemmaPrel::m_bound(const CertifiedReal& m) const {
  return m_coeff * log(delta) * (CertifiedReal(1) + log(m));
}

bool LemmaPrel::all_certified() const { return all_ok(steps); }

LemmaPrel derive_lemma_prel(const CertifiedReal& delta, const PrecisionPolicy& policy) {
  // 1 + sqrt 2 = 2.41421..., and no Pell unit lies in (2.4142, 1 + sqrt 2)
  if (!certify_less(dec("2.4142"), delta, policy)) {
    throw DomainError("derive_lemma_prel: delta must be >= 1 + sqrt 2");
  }
  LemmaPrel out;
  out.delta = delta;
  const MatveevInput in = matveev_preset();
  out.matveev_constant = matveev_constant(in.l, in.d_L, in.A);
  out.n_coeff = dec("1.8e14");
  out.m_coeff = dec("3e14");
  const CertifiedReal one(1);
  const CertifiedReal log_alpha = default_binet_constants().log_alpha;
  const CertifiedReal log_183 = log(dec("1.83"));
  const CertifiedReal one_half = dec("1.5");

  out.steps.push_back(check("matveev_constant", "1.4*30^6*3^4.5*6^2*(1+log 6)*3*2log11*2log1.84 <= 2.6e14",
                            out.matveev_constant, dec("2.6e14"), false, policy));
  // 1.5 m log(alpha) - log 4.5 < C log(delta)(1 + log m); the log 4.5 term is
  // absorbed using log(delta) >= log(1 + sqrt 2) and m >= 101.
  const CertifiedReal min_scale = log(one + sqrt(CertifiedReal(2))) * (one + log(CertifiedReal(101)));
  const CertifiedReal prel_coeff =
      out.matveev_constant / one_half + log(dec("4.5")) / (one_half * min_scale);
  out.steps.push_back(check("lemma_prel_n", "C/1.5 + log(4.5)/(1.5 log(1+sqrt2)(1+log 101)) <= 1.8e14",
                            prel_coeff, out.n_coeff, false, policy));
  out.steps.push_back(check("alpha_lower", "log 1.83 < log alpha", log_183, log_alpha, true, policy));
  out.steps.push_back(check("lemma_prel_m", "1.8e14 / log 1.83 <= 3e14", out.n_coeff / log_183,
                            out.m_coeff, false, policy));
  out.steps.push_back(check("lemma_prel_m_direct", "2.6e14 / (1.5 log 1.83) < 3e14",
                            dec("2.6e14") / (one_half * log_183), out.m_coeff, true, policy));
  return out;
}

bool DerivedBounds::all_certified() const { return all_ok(steps); }

DerivedBounds derive_lemma_jb0(const PrecisionPolicy& policy) {
  const BinetConstants& bc = default_binet_constants();
  const CertifiedReal one(1), two(2);
  const CertifiedReal log_183 = log(dec("1.83"));
  const CertifiedReal log_184 = log(dec("1.84"));
  const CertifiedReal one_half = dec("1.5");

  DerivedBounds out;
  out.matveev_printed = parse_decimal("2.6e14");
  out.lemma_prel_n_coeff = parse_decimal("1.8e14");
  out.lemma_prel_m_coeff = parse_decimal("3e14");
  out.lmn_printed = 526;
  out.case_split_n2 = 476;
  out.case_split_m1 = 28444;
  out.m1_coeff = 583;
  out.logdelta_coeff = 356;
  out.m1_final = 835000;
  out.n2_final = mpz_class("10000000000000000");
  out.m2_final = mpz_class("16000000000000000000000");
  auto& steps = out.steps;

  // |delta^n (2a)^-1 alpha^-m - 1| < 4.5 / alpha^(3m/2) for m > 100
  const CertifiedReal tail = pow(bc.alpha, 3) / (two * bc.a) /
                             (pow(bc.alpha, 50) * sqrt(bc.alpha));
  steps.push_back(check("linear_form_4_5", "alpha^3/(2a) alpha^(-50.5) + 2|b|/a < 4.5",
                        tail + two * bc.b_abs / bc.a, dec("4.5"), true, policy));

  const LemmaPrel prel = derive_lemma_prel(one + sqrt(two), policy);
  out.matveev_constant = prel.matveev_constant;
  steps.insert(steps.end(), prel.steps.begin(), prel.steps.end());

  // |n2 m1 - n1 m2| < 2 n2 and b' < 2 n2
  const CertifiedReal big = pow(bc.alpha, 151) * sqrt(bc.alpha);
  steps.push_back(check("d2_below_2n2", "chi + 12/(alpha^151.5 log alpha) < 2",
                        bc.chi + CertifiedReal(12) / (big * bc.log_alpha), two, true, policy));
  steps.push_back(check("b_prime_below_2n2", "1 + 2/log 11 < 2",
                        one + two / log(CertifiedReal(11)), two, true, policy));

  const LMNInput lmn = lmn_preset(two);
  out.lmn_constant = lmn_constant(lmn);
  steps.push_back(check("lmn_constant", "24.34*3^4*(1/3)*(log 11/3) <= 526", out.lmn_constant,
                        CertifiedReal(526), false, policy));

  // log(2 n2) + 0.14 <= 7  <=>  n2 <= e^6.86 / 2
  const mpz_class n2_split = certified_floor(exp(dec("6.86")) / two, policy);
  steps.push_back(record("case_split_n2", "floor(e^6.86 / 2) == 476", n2_split.get_str(),
                         n2_split == out.case_split_n2));

  // 1.5 m1 log(alpha) < 526 * 49 + log(c * 476) with log(alpha) > log 1.83
  auto case_m1 = [&](int c) {
    const CertifiedReal rhs = CertifiedReal(526 * 49) + log(CertifiedReal(c * 476));
    return floor_upper(rhs / (one_half * log_183));
  };
  out.case_m1_reading12 = case_m1(12);
  out.case_m1_reading18 = case_m1(18);
  steps.push_back(record("case_split_m1_12", "m1 <= floor((526*49 + log(12*476)) / (1.5 log 1.83)) <= 28444",
                         out.case_m1_reading12.get_str(), out.case_m1_reading12 <= out.case_split_m1));
  steps.push_back(record("case_split_m1_18", "m1 <= floor((526*49 + log(18*476)) / (1.5 log 1.83)) <= 28444",
                         out.case_m1_reading18.get_str(), out.case_m1_reading18 <= out.case_split_m1));

  // n2 > 476: with L = log n2, g(L) = 528 (1+L)^2 - 526 (L + log 2 + 0.14)^2 - L - log 18
  // is positive at L = log 476 and increasing (g' is linear with slope 4 and g'(0) > 0).
  const CertifiedReal shift = log(two) + dec("0.14");
  const CertifiedReal L0 = log(CertifiedReal(476));
  const CertifiedReal g = CertifiedReal(528) * pow(one + L0, 2) -
                          CertifiedReal(526) * pow(L0 + shift, 2) - L0 - log(CertifiedReal(18));
  steps.push_back(check("absorb_528_at_476", "526 (log(2n2)+0.14)^2 + log(18 n2) < 528 (1+log n2)^2 at n2 = 476",
                        CertifiedReal(0), g, true, policy));
  steps.back().value = g.to_decimal(15);
  const CertifiedReal g_prime0 = CertifiedReal(1056) - CertifiedReal(1052) * shift - one;
  steps.push_back(check("absorb_528_monotone", "d/dL of the gap at L = 0 is positive",
                        CertifiedReal(0), g_prime0, true, policy));
  steps.back().value = g_prime0.to_decimal(15);

  steps.push_back(check("m1_coeff", "528 / (1.5 log 1.83) <= 583",
                        CertifiedReal(528) / (one_half * log_183), CertifiedReal(583), false, policy));
  steps.push_back(check("logdelta_coeff", "583 log 1.84 <= 356",
                        CertifiedReal(583) * log_184, CertifiedReal(356), false, policy));
  steps.push_back(check("alpha_upper", "log alpha < log 1.84", bc.log_alpha, log_184, true, policy));

  const CertifiedReal C = CertifiedReal::from_decimal("3e14") * CertifiedReal(356);
  out.m2_implicit = solve_implicit(C, 3, policy);
  steps.push_back(record("m2_final", "solve_implicit(3e14 * 356, 3) <= 1.6e22",
                         out.m2_implicit.get_str(), out.m2_implicit <= out.m2_final));

  const CertifiedReal n2_bound =
      dec("1.8e14") * (one + log(CertifiedReal::from_integer(out.m2_final)));
  steps.push_back(check("n2_final", "1.8e14 (1 + log 1.6e22) < 1e16", n2_bound,
                        CertifiedReal::from_integer(out.n2_final), true, policy));

  const CertifiedReal m1_bound =
      CertifiedReal(583) * pow(one + log(CertifiedReal::from_integer(out.n2_final)), 2);
  steps.push_back(check("m1_final", "583 (1 + log 1e16)^2 < 835000", m1_bound,
                        CertifiedReal::from_integer(out.m1_final), true, policy));
  return out;
}

}  // namespace pelltrib
