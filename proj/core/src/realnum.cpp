#include "pelltrib/realnum.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <utility>

namespace pelltrib {

// ---------------------------------------------------------------------------
// PrecisionPolicy

void PrecisionPolicy::validate() const {
  if (initial_bits < 64) {
    throw DomainError("PrecisionPolicy: initial_bits must be >= 64");
  }
  if (max_bits < initial_bits) {
    throw DomainError("PrecisionPolicy: max_bits must be >= initial_bits");
  }
  if (growth_factor < 2) {
    throw DomainError("PrecisionPolicy: growth_factor must be >= 2");
  }
}

std::vector<mpfr_prec_t> PrecisionPolicy::ladder() const {
  std::vector<mpfr_prec_t> out;
  mpfr_prec_t p = initial_bits;
  while (p < max_bits) {
    out.push_back(p);
    p *= static_cast<mpfr_prec_t>(growth_factor);
  }
  out.push_back(max_bits);
  return out;
}

// ---------------------------------------------------------------------------
// BigFloat

BigFloat::BigFloat(mpfr_prec_t prec) {
  mpfr_init2(value_, prec);
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);  // same precision: exact
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  if (this != &other) mpfr_swap(value_, other.value_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

mpq_class BigFloat::to_rational() const {
  if (!mpfr_number_p(value_)) {
    throw DomainError("non-finite value in certified arithmetic");
  }
  if (mpfr_zero_p(value_)) return mpq_class(0);
  mpz_class mant;
  const mpfr_exp_t e = mpfr_get_z_2exp(mant.get_mpz_t(), value_);
  mpq_class q(mant);
  if (e >= 0) {
    mpz_mul_2exp(q.get_num_mpz_t(), q.get_num_mpz_t(), static_cast<mp_bitcnt_t>(e));
  } else {
    mpz_mul_2exp(q.get_den_mpz_t(), q.get_den_mpz_t(), static_cast<mp_bitcnt_t>(-e));
  }
  q.canonicalize();
  return q;
}

std::string BigFloat::to_string(int significant_digits, mpfr_rnd_t rnd) const {
  char* buf = nullptr;
  const char fmt_rnd = rnd == MPFR_RNDD ? 'D' : rnd == MPFR_RNDU ? 'U' : 'N';
  const std::string fmt = std::string("%.*R") + fmt_rnd + "g";
  mpfr_asprintf(&buf, fmt.c_str(), significant_digits, value_);
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

// ---------------------------------------------------------------------------
// Interval

Interval::Interval(BigFloat lo, BigFloat hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (lo_.precision() != hi_.precision()) {
    const mpfr_prec_t p = std::max(lo_.precision(), hi_.precision());
    mpfr_prec_round(lo_.get(), p, MPFR_RNDD);
    mpfr_prec_round(hi_.get(), p, MPFR_RNDU);
  }
  if (mpfr_nan_p(lo_.get()) || mpfr_nan_p(hi_.get()) || mpfr_greater_p(lo_.get(), hi_.get())) {
    throw Discrepancy("malformed interval");
  }
}

Interval Interval::exact(const mpz_class& value, mpfr_prec_t prec) {
  const auto need = static_cast<mpfr_prec_t>(mpz_sizeinbase(value.get_mpz_t(), 2)) + 1;
  const mpfr_prec_t p = std::max(prec, need);
  BigFloat lo(p), hi(p);
  mpfr_set_z(lo.get(), value.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(hi.get(), value.get_mpz_t(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

Interval Interval::enclose(const mpq_class& value, mpfr_prec_t prec) {
  BigFloat lo(prec), hi(prec);
  mpfr_set_q(lo.get(), value.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi.get(), value.get_mpq_t(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

bool Interval::contains(const mpq_class& value) const {
  return mpfr_cmp_q(lo_.get(), value.get_mpq_t()) <= 0 &&
         mpfr_cmp_q(hi_.get(), value.get_mpq_t()) >= 0;
}

bool Interval::contains_zero() const {
  return mpfr_sgn(lo_.get()) <= 0 && mpfr_sgn(hi_.get()) >= 0;
}

bool Interval::is_positive() const { return mpfr_sgn(lo_.get()) > 0; }
bool Interval::is_negative() const { return mpfr_sgn(hi_.get()) < 0; }
bool Interval::is_point() const { return mpfr_equal_p(lo_.get(), hi_.get()) != 0; }

mpq_class Interval::midpoint() const {
  return (lo_.to_rational() + hi_.to_rational()) / 2;
}

mpq_class Interval::radius() const {
  return (hi_.to_rational() - lo_.to_rational()) / 2;
}

std::string Interval::describe(int digits) const {
  return "[" + lo_.to_string(digits, MPFR_RNDD) + ", " + hi_.to_string(digits, MPFR_RNDU) + "]";
}

// ---------------------------------------------------------------------------
// Interval kernels

namespace ia {
namespace {

mpfr_prec_t joint(const Interval& x, const Interval& y) {
  return std::max(x.precision(), y.precision());
}

using BinaryOp = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);

// Lower and upper envelope of op over the four endpoint pairs. Valid for
// mul and div (extrema of a bilinear/hyperbolic map on a box are at corners).
Interval corners(const Interval& x, const Interval& y, BinaryOp op) {
  const mpfr_prec_t p = joint(x, y);
  BigFloat lo(p), hi(p), tmp(p);
  bool first = true;
  for (const BigFloat* a : {&x.lo(), &x.hi()}) {
    for (const BigFloat* b : {&y.lo(), &y.hi()}) {
      op(tmp.get(), a->get(), b->get(), MPFR_RNDD);
      if (first || mpfr_less_p(tmp.get(), lo.get())) mpfr_set(lo.get(), tmp.get(), MPFR_RNDD);
      op(tmp.get(), a->get(), b->get(), MPFR_RNDU);
      if (first || mpfr_greater_p(tmp.get(), hi.get())) mpfr_set(hi.get(), tmp.get(), MPFR_RNDU);
      first = false;
    }
  }
  return Interval(std::move(lo), std::move(hi));
}

using UnaryOp = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);

Interval monotone(const Interval& x, UnaryOp op) {
  const mpfr_prec_t p = x.precision();
  BigFloat lo(p), hi(p);
  op(lo.get(), x.lo().get(), MPFR_RNDD);
  op(hi.get(), x.hi().get(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

}  // namespace

Interval add(const Interval& x, const Interval& y) {
  const mpfr_prec_t p = joint(x, y);
  BigFloat lo(p), hi(p);
  mpfr_add(lo.get(), x.lo().get(), y.lo().get(), MPFR_RNDD);
  mpfr_add(hi.get(), x.hi().get(), y.hi().get(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

Interval sub(const Interval& x, const Interval& y) {
  const mpfr_prec_t p = joint(x, y);
  BigFloat lo(p), hi(p);
  mpfr_sub(lo.get(), x.lo().get(), y.hi().get(), MPFR_RNDD);
  mpfr_sub(hi.get(), x.hi().get(), y.lo().get(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

Interval mul(const Interval& x, const Interval& y) { return corners(x, y, &mpfr_mul); }

Interval div(const Interval& x, const Interval& y) {
  if (y.is_point() && mpfr_zero_p(y.lo().get())) throw DomainError("division by exact zero");
  if (y.contains_zero()) {
    throw InsufficientPrecision("divisor enclosure " + y.describe() + " contains zero");
  }
  return corners(x, y, &mpfr_div);
}

Interval neg(const Interval& x) {
  const mpfr_prec_t p = x.precision();
  BigFloat lo(p), hi(p);
  mpfr_neg(lo.get(), x.hi().get(), MPFR_RNDD);
  mpfr_neg(hi.get(), x.lo().get(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

Interval abs(const Interval& x) {
  if (mpfr_sgn(x.lo().get()) >= 0) return x;
  if (mpfr_sgn(x.hi().get()) <= 0) return neg(x);
  const mpfr_prec_t p = x.precision();
  BigFloat lo(p), hi(p);
  mpfr_neg(hi.get(), x.lo().get(), MPFR_RNDU);
  mpfr_max(hi.get(), hi.get(), x.hi().get(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

Interval pow(const Interval& x, unsigned long n) {
  const mpfr_prec_t p = x.precision();
  BigFloat lo(p), hi(p);
  if (n == 0) {
    mpfr_set_ui(lo.get(), 1, MPFR_RNDD);
    mpfr_set_ui(hi.get(), 1, MPFR_RNDU);
    return Interval(std::move(lo), std::move(hi));
  }
  const bool odd = (n % 2) == 1;
  if (odd || mpfr_sgn(x.lo().get()) >= 0) {
    // monotone increasing on the whole enclosure
    mpfr_pow_ui(lo.get(), x.lo().get(), n, MPFR_RNDD);
    mpfr_pow_ui(hi.get(), x.hi().get(), n, MPFR_RNDU);
  } else if (mpfr_sgn(x.hi().get()) <= 0) {
    mpfr_pow_ui(lo.get(), x.hi().get(), n, MPFR_RNDD);
    mpfr_pow_ui(hi.get(), x.lo().get(), n, MPFR_RNDU);
  } else {
    BigFloat a(p), b(p);
    mpfr_pow_ui(a.get(), x.lo().get(), n, MPFR_RNDU);
    mpfr_pow_ui(b.get(), x.hi().get(), n, MPFR_RNDU);
    mpfr_max(hi.get(), a.get(), b.get(), MPFR_RNDU);
  }
  return Interval(std::move(lo), std::move(hi));
}

Interval sqrt(const Interval& x) {
  if (x.is_negative()) {
    throw DomainError("sqrt of negative enclosure " + x.describe());
  }
  if (mpfr_sgn(x.lo().get()) < 0) {
    throw InsufficientPrecision("sqrt argument " + x.describe() + " straddles zero");
  }
  return monotone(x, &mpfr_sqrt);
}

Interval cbrt(const Interval& x) { return monotone(x, &mpfr_cbrt); }

Interval log(const Interval& x) {
  if (mpfr_sgn(x.hi().get()) <= 0) {
    throw DomainError("log of non-positive enclosure " + x.describe());
  }
  if (!x.is_positive()) {
    throw InsufficientPrecision("log argument " + x.describe() + " touches zero");
  }
  return monotone(x, &mpfr_log);
}

Interval exp(const Interval& x) { return monotone(x, &mpfr_exp); }

Interval nearest_int_distance(const Interval& x) {
  // ||t|| is continuous and piecewise linear, so its range over [lo, hi] is
  // fixed by the endpoints plus whether an integer or a half-integer lies
  // inside. Everything is done on exact rationals.
  const mpq_class lo = x.lo().to_rational();
  const mpq_class hi = x.hi().to_rational();
  const mpq_class half(1, 2);
  auto floor_q = [](const mpq_class& q) {
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return f;
  };
  auto dist = [&](const mpq_class& t) {
    mpq_class d = t - mpq_class(floor_q(t + half));
    return d < 0 ? mpq_class(-d) : d;
  };
  const mpq_class d_lo = dist(lo), d_hi = dist(hi);
  const bool has_integer = floor_q(hi) > floor_q(lo) || floor_q(lo) == lo;
  const bool has_half = floor_q(hi - half) > floor_q(lo - half) || floor_q(lo - half) == lo - half;
  const mpq_class low = has_integer ? mpq_class(0) : std::min(d_lo, d_hi);
  const mpq_class high = has_half ? half : std::max(d_lo, d_hi);
  const mpfr_prec_t p = x.precision();
  Interval a = Interval::enclose(low, p), b = Interval::enclose(high, p);
  return Interval(a.lo(), b.hi());
}

Interval hull(const Interval& x, const Interval& y) {
  const mpfr_prec_t p = joint(x, y);
  BigFloat lo(p), hi(p);
  mpfr_min(lo.get(), x.lo().get(), y.lo().get(), MPFR_RNDD);
  mpfr_max(hi.get(), x.hi().get(), y.hi().get(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

}  // namespace ia

// ---------------------------------------------------------------------------
// Node

namespace detail {

Node::Node(std::string label, Evaluator eval)
    : label_(std::move(label)), eval_(std::move(eval)) {}

Interval Node::at(mpfr_prec_t prec) const {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    if (auto it = cache_.find(prec); it != cache_.end()) return it->second;
  }
  Interval value = eval_(prec);
  std::lock_guard<std::mutex> lock(mutex_);
  return cache_.try_emplace(prec, std::move(value)).first->second;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// CertifiedReal

CertifiedReal::CertifiedReal() : CertifiedReal(from_integer(0)) {}

CertifiedReal::CertifiedReal(std::shared_ptr<const detail::Node> node, Interval enclosure)
    : node_(std::move(node)), enclosure_(std::move(enclosure)) {}

CertifiedReal with_exact(CertifiedReal r, std::shared_ptr<const mpq_class> q) {
  r.exact_ = std::move(q);
  return r;
}

CertifiedReal CertifiedReal::from_integer(const mpz_class& value) {
  return with_exact(
      from_evaluator(
          value.get_str(), [value](mpfr_prec_t p) { return Interval::exact(value, p); },
          kDefaultBits),
      std::make_shared<const mpq_class>(value));
}

CertifiedReal CertifiedReal::from_rational(const mpq_class& value) {
  mpq_class v = value;
  v.canonicalize();
  if (v.get_den() == 1) return from_integer(v.get_num());
  return with_exact(
      from_evaluator(
          v.get_str(), [v](mpfr_prec_t p) { return Interval::enclose(v, p); }, kDefaultBits),
      std::make_shared<const mpq_class>(v));
}

CertifiedReal CertifiedReal::from_decimal(std::string_view text) {
  return from_rational(parse_decimal(text));
}

CertifiedReal CertifiedReal::from_evaluator(std::string label, detail::Evaluator eval,
                                            mpfr_prec_t prec) {
  auto node = std::make_shared<const detail::Node>(std::move(label), std::move(eval));
  Interval enclosure = node->at(prec);
  return CertifiedReal(std::move(node), std::move(enclosure));
}

CertifiedReal CertifiedReal::lift(std::string label, std::vector<CertifiedReal> args,
                                  IntervalFn fn) {
  std::vector<Interval> current;
  std::vector<std::shared_ptr<const detail::Node>> nodes;
  current.reserve(args.size());
  nodes.reserve(args.size());
  for (const auto& a : args) {
    current.push_back(a.enclosure_);
    nodes.push_back(a.node_);
  }
  Interval enclosure = fn(current);
  auto node = std::make_shared<const detail::Node>(
      std::move(label), [nodes = std::move(nodes), fn](mpfr_prec_t p) {
        std::vector<Interval> at_p;
        at_p.reserve(nodes.size());
        for (const auto& n : nodes) at_p.push_back(n->at(p));
        return fn(at_p);
      });
  return CertifiedReal(std::move(node), std::move(enclosure));
}

CertifiedReal CertifiedReal::at_bits(mpfr_prec_t prec) const {
  const mpfr_prec_t p = std::max(prec, bits());
  if (p == bits()) return *this;
  return with_exact(CertifiedReal(node_, node_->at(p)), exact_);
}

CertifiedReal CertifiedReal::refine(const mpq_class& target_err,
                                    const PrecisionPolicy& policy) const {
  if (err() <= target_err) return *this;
  return with_refinement(policy, [&](mpfr_prec_t p) {
    CertifiedReal r = at_bits(p);
    if (r.err() > target_err) {
      throw InsufficientPrecision(label() + ": error " + r.enclosure().describe(6) +
                                  " above target at " + std::to_string(p) + " bits");
    }
    return r;
  });
}

std::string CertifiedReal::to_decimal(int digits) const {
  const mpfr_prec_t p = bits();
  BigFloat mid(p + 2);
  mpfr_add(mid.get(), enclosure_.lo().get(), enclosure_.hi().get(), MPFR_RNDN);
  mpfr_div_2ui(mid.get(), mid.get(), 1, MPFR_RNDN);
  return mid.to_string(digits);
}

double CertifiedReal::to_double() const { return approx().get_d(); }

CertifiedReal operator+(const CertifiedReal& x, const CertifiedReal& y) {
  CertifiedReal r =
      CertifiedReal::lift("(" + x.label() + "+" + y.label() + ")", {x, y},
                          [](const std::vector<Interval>& v) { return ia::add(v[0], v[1]); });
  if (x.exact_value() && y.exact_value()) {
    r = with_exact(std::move(r), std::make_shared<const mpq_class>(*x.exact_value() + *y.exact_value()));
  }
  return r;
}

CertifiedReal operator-(const CertifiedReal& x, const CertifiedReal& y) {
  CertifiedReal r =
      CertifiedReal::lift("(" + x.label() + "-" + y.label() + ")", {x, y},
                          [](const std::vector<Interval>& v) { return ia::sub(v[0], v[1]); });
  if (x.exact_value() && y.exact_value()) {
    r = with_exact(std::move(r), std::make_shared<const mpq_class>(*x.exact_value() - *y.exact_value()));
  }
  return r;
}

CertifiedReal operator*(const CertifiedReal& x, const CertifiedReal& y) {
  CertifiedReal r =
      CertifiedReal::lift("(" + x.label() + "*" + y.label() + ")", {x, y},
                          [](const std::vector<Interval>& v) { return ia::mul(v[0], v[1]); });
  if (x.exact_value() && y.exact_value()) {
    r = with_exact(std::move(r), std::make_shared<const mpq_class>(*x.exact_value() * *y.exact_value()));
  }
  return r;
}

CertifiedReal operator/(const CertifiedReal& x, const CertifiedReal& y) {
  CertifiedReal r =
      CertifiedReal::lift("(" + x.label() + "/" + y.label() + ")", {x, y},
                          [](const std::vector<Interval>& v) { return ia::div(v[0], v[1]); });
  if (x.exact_value() && y.exact_value() && *y.exact_value() != 0) {
    r = with_exact(std::move(r), std::make_shared<const mpq_class>(*x.exact_value() / *y.exact_value()));
  }
  return r;
}

CertifiedReal operator-(const CertifiedReal& x) {
  CertifiedReal r = CertifiedReal::lift("-" + x.label(), {x},
                                        [](const std::vector<Interval>& v) { return ia::neg(v[0]); });
  if (x.exact_value()) r = with_exact(std::move(r), std::make_shared<const mpq_class>(-*x.exact_value()));
  return r;
}

namespace {

CertifiedReal unary(const char* name, const CertifiedReal& x, Interval (*fn)(const Interval&)) {
  return CertifiedReal::lift(std::string(name) + "(" + x.label() + ")", {x},
                             [fn](const std::vector<Interval>& v) { return fn(v[0]); });
}

}  // namespace

CertifiedReal log(const CertifiedReal& x) { return unary("log", x, &ia::log); }
CertifiedReal exp(const CertifiedReal& x) { return unary("exp", x, &ia::exp); }
CertifiedReal sqrt(const CertifiedReal& x) { return unary("sqrt", x, &ia::sqrt); }
CertifiedReal cbrt(const CertifiedReal& x) { return unary("cbrt", x, &ia::cbrt); }
CertifiedReal abs(const CertifiedReal& x) { return unary("abs", x, &ia::abs); }

CertifiedReal nearest_int_distance(const CertifiedReal& x) {
  return unary("dist", x, &ia::nearest_int_distance);
}

CertifiedReal pow(const CertifiedReal& x, unsigned long n) {
  CertifiedReal r =
      CertifiedReal::lift(x.label() + "^" + std::to_string(n), {x},
                          [n](const std::vector<Interval>& v) { return ia::pow(v[0], n); });
  if (const mpq_class* q = x.exact_value()) {
    mpq_class e;
    mpz_pow_ui(e.get_num_mpz_t(), q->get_num_mpz_t(), n);
    mpz_pow_ui(e.get_den_mpz_t(), q->get_den_mpz_t(), n);
    r = with_exact(std::move(r), std::make_shared<const mpq_class>(e));
  }
  return r;
}

// ---------------------------------------------------------------------------
// Certified decisions

bool certify_less(const CertifiedReal& x, const CertifiedReal& y, const PrecisionPolicy& policy) {
  if (x.exact_value() && y.exact_value()) return *x.exact_value() < *y.exact_value();
  return with_refinement(policy, [&](mpfr_prec_t p) {
    const CertifiedReal a = x.at_bits(p), b = y.at_bits(p);
    if (mpfr_less_p(a.enclosure().hi().get(), b.enclosure().lo().get())) return true;
    if (mpfr_greaterequal_p(a.enclosure().lo().get(), b.enclosure().hi().get())) return false;
    throw InsufficientPrecision("cannot order " + a.enclosure().describe() + " and " +
                                b.enclosure().describe());
  });
}

bool certify_less_equal(const CertifiedReal& x, const CertifiedReal& y,
                        const PrecisionPolicy& policy) {
  if (x.exact_value() && y.exact_value()) return *x.exact_value() <= *y.exact_value();
  return with_refinement(policy, [&](mpfr_prec_t p) {
    const CertifiedReal a = x.at_bits(p), b = y.at_bits(p);
    if (mpfr_lessequal_p(a.enclosure().hi().get(), b.enclosure().lo().get())) return true;
    if (mpfr_greater_p(a.enclosure().lo().get(), b.enclosure().hi().get())) return false;
    throw InsufficientPrecision("cannot order " + a.enclosure().describe() + " and " +
                                b.enclosure().describe());
  });
}

int certify_sign(const CertifiedReal& x, const PrecisionPolicy& policy) {
  if (const mpq_class* q = x.exact_value()) return sgn(*q);
  return with_refinement(policy, [&](mpfr_prec_t p) {
    const CertifiedReal a = x.at_bits(p);
    if (a.enclosure().is_positive()) return 1;
    if (a.enclosure().is_negative()) return -1;
    throw InsufficientPrecision("sign of " + a.label() + " undecided: " +
                                a.enclosure().describe());
  });
}

namespace {

mpz_class floor_of(const BigFloat& f) {
  mpz_class z;
  const mpq_class q = f.to_rational();
  mpz_fdiv_q(z.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return z;
}

mpz_class ceil_of(const BigFloat& f) {
  mpz_class z;
  const mpq_class q = f.to_rational();
  mpz_cdiv_q(z.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return z;
}

}  // namespace

mpz_class certified_floor(const CertifiedReal& x, const PrecisionPolicy& policy) {
  return with_refinement(policy, [&](mpfr_prec_t p) {
    const CertifiedReal a = x.at_bits(p);
    mpz_class lo = floor_of(a.enclosure().lo());
    if (lo != floor_of(a.enclosure().hi())) {
      throw InsufficientPrecision("floor of " + a.enclosure().describe() + " undecided");
    }
    return lo;
  });
}

mpz_class certified_ceil(const CertifiedReal& x, const PrecisionPolicy& policy) {
  return with_refinement(policy, [&](mpfr_prec_t p) {
    const CertifiedReal a = x.at_bits(p);
    mpz_class lo = ceil_of(a.enclosure().lo());
    if (lo != ceil_of(a.enclosure().hi())) {
      throw InsufficientPrecision("ceiling of " + a.enclosure().describe() + " undecided");
    }
    return lo;
  });
}

mpz_class ceil_upper(const CertifiedReal& x) { return ceil_of(x.enclosure().hi()); }
mpz_class floor_upper(const CertifiedReal& x) { return floor_of(x.enclosure().hi()); }
mpz_class floor_lower(const CertifiedReal& x) { return floor_of(x.enclosure().lo()); }

mpq_class parse_decimal(std::string_view text) {
  std::string s(text);
  auto bad = [&] { return DomainError("not a decimal number: '" + s + "'"); };
  std::size_t i = 0;
  bool negative = false;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) negative = s[i++] == '-';
  std::string digits;
  long frac_digits = 0;
  bool seen_dot = false, seen_digit = false;
  for (; i < s.size(); ++i) {
    const char c = s[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      seen_digit = true;
      if (seen_dot) ++frac_digits;
    } else if (c == '.' && !seen_dot) {
      seen_dot = true;
    } else {
      break;
    }
  }
  if (!seen_digit) throw bad();
  long exponent = 0;
  if (i < s.size()) {
    if (s[i] != 'e' && s[i] != 'E') throw bad();
    ++i;
    std::size_t used = 0;
    try {
      exponent = std::stol(s.substr(i), &used);
    } catch (const std::exception&) {
      throw bad();
    }
    if (i + used != s.size()) throw bad();
  }
  mpq_class q{mpz_class(digits, 10)};
  const long shift = exponent - frac_digits;
  mpz_class ten_pow;
  mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
  if (shift >= 0) {
    q *= ten_pow;
  } else {
    q /= ten_pow;
  }
  q.canonicalize();
  return negative ? mpq_class(-q) : q;
}

}  // namespace pelltrib
