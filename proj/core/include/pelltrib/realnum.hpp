#pragma once

// Certified arbitrary-precision reals.
//
// A CertifiedReal is a closed interval [lo, hi] with MPFR endpoints that is
// guaranteed to contain the true value, together with a recipe for
// recomputing that interval at any working precision. Every operation rounds
// its endpoints outward, so enclosures are never shrunk except by
// re-evaluation at higher precision.

#include <gmpxx.h>
#include <mpfr.h>

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

#include "pelltrib/errors.hpp"

namespace pelltrib {

struct PrecisionPolicy {
  mpfr_prec_t initial_bits = 192;
  mpfr_prec_t max_bits = 8192;
  unsigned growth_factor = 2;

  // Throws DomainError unless initial_bits >= 64, max_bits >= initial_bits
  // and growth_factor >= 2.
  void validate() const;

  // initial_bits, initial_bits*g, ..., capped at (and always ending with)
  // max_bits.
  std::vector<mpfr_prec_t> ladder() const;
};

// RAII owner of an mpfr_t.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t prec);
  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }
  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }

  // Exact conversion; throws DomainError for NaN or infinities.
  mpq_class to_rational() const;
  std::string to_string(int significant_digits, mpfr_rnd_t rnd = MPFR_RNDN) const;

 private:
  mpfr_t value_;
};

// Closed interval with outward-rounded endpoints, both at the same precision.
class Interval {
 public:
  Interval(BigFloat lo, BigFloat hi);

  static Interval exact(const mpz_class& value, mpfr_prec_t prec);
  static Interval enclose(const mpq_class& value, mpfr_prec_t prec);

  const BigFloat& lo() const { return lo_; }
  const BigFloat& hi() const { return hi_; }
  mpfr_prec_t precision() const { return lo_.precision(); }

  bool contains(const mpq_class& value) const;
  bool contains_zero() const;
  bool is_positive() const;  // lo > 0
  bool is_negative() const;  // hi < 0
  bool is_point() const;

  mpq_class midpoint() const;
  mpq_class radius() const;  // exact (hi - lo) / 2

  std::string describe(int digits = 20) const;

 private:
  BigFloat lo_;
  BigFloat hi_;
};

// Outward-rounded interval kernels. Results carry the larger of the operand
// precisions.
namespace ia {
Interval add(const Interval& x, const Interval& y);
Interval sub(const Interval& x, const Interval& y);
Interval mul(const Interval& x, const Interval& y);
Interval div(const Interval& x, const Interval& y);
Interval neg(const Interval& x);
Interval abs(const Interval& x);
Interval pow(const Interval& x, unsigned long n);
Interval sqrt(const Interval& x);
Interval cbrt(const Interval& x);
Interval log(const Interval& x);
Interval exp(const Interval& x);
Interval nearest_int_distance(const Interval& x);
Interval hull(const Interval& x, const Interval& y);
}  // namespace ia

namespace detail {

using Evaluator = std::function<Interval(mpfr_prec_t)>;

// One vertex of the expression DAG behind a CertifiedReal. Re-evaluation at
// a given precision is memoized; the cache is internal and guarded, so shared
// nodes may be read from several threads.
class Node {
 public:
  Node(std::string label, Evaluator eval);

  Interval at(mpfr_prec_t prec) const;
  const std::string& label() const { return label_; }

 private:
  std::string label_;
  Evaluator eval_;
  mutable std::mutex mutex_;
  mutable std::map<mpfr_prec_t, Interval> cache_;
};

}  // namespace detail

class CertifiedReal {
 public:
  static constexpr mpfr_prec_t kDefaultBits = 192;

  // Exact zero.
  CertifiedReal();
  template <typename Int, std::enable_if_t<std::is_integral_v<Int>, int> = 0>
  CertifiedReal(Int value) : CertifiedReal(from_integer(mpz_class(value))) {}  // NOLINT

  static CertifiedReal from_integer(const mpz_class& value);
  static CertifiedReal from_rational(const mpq_class& value);
  // Parses "14.8", "-0.25", "1e16", "1.6e22" exactly as a rational.
  static CertifiedReal from_decimal(std::string_view text);
  static CertifiedReal from_evaluator(std::string label, detail::Evaluator eval,
                                      mpfr_prec_t prec = kDefaultBits);

  const Interval& enclosure() const { return enclosure_; }
  mpfr_prec_t bits() const { return enclosure_.precision(); }
  const std::string& label() const { return node_->label(); }

  // Exact value when the whole expression is rational arithmetic on exact
  // inputs, nullptr otherwise.
  const mpq_class* exact_value() const { return exact_.get(); }

  mpq_class approx() const { return enclosure_.midpoint(); }
  mpq_class err() const { return enclosure_.radius(); }

  // Re-evaluates the whole expression at max(prec, bits()).
  CertifiedReal at_bits(mpfr_prec_t prec) const;

  // Climbs the policy's precision ladder until err() <= target_err. Throws
  // InsufficientPrecision when the cap is reached first.
  CertifiedReal refine(const mpq_class& target_err,
                       const PrecisionPolicy& policy = {}) const;

  // Midpoint rendered with `digits` significant digits.
  std::string to_decimal(int digits = 30) const;
  double to_double() const;

  using IntervalFn = std::function<Interval(const std::vector<Interval>&)>;

  // Builds the value fn(args...). Its enclosure is fn applied to the
  // arguments' current enclosures; refinement re-evaluates the arguments at
  // the new precision and applies fn again.
  static CertifiedReal lift(std::string label, std::vector<CertifiedReal> args,
                            IntervalFn fn);

 private:
  CertifiedReal(std::shared_ptr<const detail::Node> node, Interval enclosure);

  friend CertifiedReal with_exact(CertifiedReal r, std::shared_ptr<const mpq_class> q);

  std::shared_ptr<const detail::Node> node_;
  Interval enclosure_;
  std::shared_ptr<const mpq_class> exact_;
};

CertifiedReal operator+(const CertifiedReal& x, const CertifiedReal& y);
CertifiedReal operator-(const CertifiedReal& x, const CertifiedReal& y);
CertifiedReal operator*(const CertifiedReal& x, const CertifiedReal& y);
// Throws InsufficientPrecision when y's enclosure contains zero.
CertifiedReal operator/(const CertifiedReal& x, const CertifiedReal& y);
CertifiedReal operator-(const CertifiedReal& x);

// Elementary functions. Domain violations decided by the current enclosure
// throw DomainError; enclosures that straddle a domain boundary throw
// InsufficientPrecision.
CertifiedReal log(const CertifiedReal& x);
CertifiedReal exp(const CertifiedReal& x);
CertifiedReal sqrt(const CertifiedReal& x);
CertifiedReal cbrt(const CertifiedReal& x);
CertifiedReal abs(const CertifiedReal& x);
CertifiedReal pow(const CertifiedReal& x, unsigned long n);

// ||x||, the distance from x to the nearest integer. When the enclosure
// straddles an integer or a half-integer the result widens to 0 or 1/2.
CertifiedReal nearest_int_distance(const CertifiedReal& x);

// Runs f(prec) for each precision on the policy ladder, retrying whenever f
// throws InsufficientPrecision. The last failure propagates.
template <typename F>
auto with_refinement(const PrecisionPolicy& policy, F&& f)
    -> decltype(f(mpfr_prec_t{})) {
  policy.validate();
  const auto ladder = policy.ladder();
  for (std::size_t i = 0; i + 1 < ladder.size(); ++i) {
    try {
      return f(ladder[i]);
    } catch (const InsufficientPrecision&) {
    }
  }
  return f(ladder.back());
}

// Certified comparisons. Each refines both operands along the policy ladder
// until the enclosures decide the question.
bool certify_less(const CertifiedReal& x, const CertifiedReal& y,
                  const PrecisionPolicy& policy = {});
bool certify_less_equal(const CertifiedReal& x, const CertifiedReal& y,
                        const PrecisionPolicy& policy = {});
// Sign of x: -1 or +1. Throws InsufficientPrecision if x cannot be separated
// from zero (which is always the case for an exact zero).
int certify_sign(const CertifiedReal& x, const PrecisionPolicy& policy = {});

mpz_class certified_floor(const CertifiedReal& x, const PrecisionPolicy& policy = {});
mpz_class certified_ceil(const CertifiedReal& x, const PrecisionPolicy& policy = {});
// An integer >= x, taken from the upper endpoint. Always succeeds.
mpz_class ceil_upper(const CertifiedReal& x);
// An integer <= x, taken from the lower endpoint. Always succeeds.
mpz_class floor_lower(const CertifiedReal& x);
// floor of the upper endpoint: every integer k < x satisfies k <= floor_upper(x).
mpz_class floor_upper(const CertifiedReal& x);

mpq_class parse_decimal(std::string_view text);

}  // namespace pelltrib
