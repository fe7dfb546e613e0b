#pragma once

// Outward-rounded interval arithmetic over MPFR. Each endpoint is computed
// with the directed rounding mode that keeps the true value enclosed.

#include <aon/error.hpp>

#include <gmpxx.h>
#include <mpfr.h>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

namespace aon::ia {

/// Owning handle for an mpfr_t.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
  BigFloat(const BigFloat& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  BigFloat(BigFloat&& o) noexcept : BigFloat(mpfr_get_prec(o.v_)) { mpfr_swap(v_, o.v_); }
  BigFloat& operator=(BigFloat o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~BigFloat() { mpfr_clear(v_); }

  mpfr_ptr get() noexcept { return v_; }
  mpfr_srcptr get() const noexcept { return v_; }
  mpfr_prec_t precision() const noexcept { return mpfr_get_prec(v_); }

  double to_double(mpfr_rnd_t rnd) const { return mpfr_get_d(v_, rnd); }
  std::string to_string(int digits = 20) const {
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*Rg", digits, v_);
    std::string s(buf);
    mpfr_free_str(buf);
    return s;
  }

 private:
  mpfr_t v_;
};

/// A closed interval [lo, hi] known to contain some real number.
class Interval {
 public:
  explicit Interval(mpfr_prec_t prec) : lo_(prec), hi_(prec) {}

  static Interval from_int(std::int64_t v, mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_set_si(r.lo_.get(), v, MPFR_RNDD);
    mpfr_set_si(r.hi_.get(), v, MPFR_RNDU);
    return r;
  }

  static Interval from_uint(std::uint64_t v, mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_set_ui(r.lo_.get(), v, MPFR_RNDD);
    mpfr_set_ui(r.hi_.get(), v, MPFR_RNDU);
    return r;
  }

  static Interval from_rational(const mpq_class& q, mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_set_q(r.lo_.get(), q.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_.get(), q.get_mpq_t(), MPFR_RNDU);
    return r;
  }

  /// num / den with both endpoints correctly rounded outward.
  static Interval ratio(std::int64_t num, std::int64_t den, mpfr_prec_t prec) {
    return from_rational(mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den))),
                         prec);
  }

  const BigFloat& lo() const noexcept { return lo_; }
  const BigFloat& hi() const noexcept { return hi_; }
  mpfr_prec_t precision() const noexcept { return lo_.precision(); }

  double lo_double() const { return lo_.to_double(MPFR_RNDD); }
  double hi_double() const { return hi_.to_double(MPFR_RNDU); }
  double mid_double() const {
    BigFloat m(precision() + 1);
    mpfr_add(m.get(), lo_.get(), hi_.get(), MPFR_RNDN);
    mpfr_div_2ui(m.get(), m.get(), 1, MPFR_RNDN);
    return m.to_double(MPFR_RNDN);
  }

  /// hi - lo, rounded up.
  double width() const {
    BigFloat w(precision());
    mpfr_sub(w.get(), hi_.get(), lo_.get(), MPFR_RNDU);
    return w.to_double(MPFR_RNDU);
  }

  bool certainly_less(const Interval& o) const { return mpfr_less_p(hi_.get(), o.lo_.get()) != 0; }
  bool certainly_greater(const Interval& o) const { return o.certainly_less(*this); }
  bool certainly_positive() const { return mpfr_sgn(lo_.get()) > 0; }
  bool certainly_nonnegative() const { return mpfr_sgn(lo_.get()) >= 0; }

  /// floor(x) when every point of the interval has the same floor.
  std::optional<std::int64_t> common_floor() const {
    BigFloat a(precision());
    BigFloat b(precision());
    mpfr_floor(a.get(), lo_.get());
    mpfr_floor(b.get(), hi_.get());
    if (!mpfr_equal_p(a.get(), b.get())) return std::nullopt;
    return static_cast<std::int64_t>(mpfr_get_si(a.get(), MPFR_RNDD));
  }

  friend Interval operator+(const Interval& a, const Interval& b) {
    Interval r(a.precision());
    mpfr_add(r.lo_.get(), a.lo_.get(), b.lo_.get(), MPFR_RNDD);
    mpfr_add(r.hi_.get(), a.hi_.get(), b.hi_.get(), MPFR_RNDU);
    return r;
  }

  friend Interval operator-(const Interval& a, const Interval& b) {
    Interval r(a.precision());
    mpfr_sub(r.lo_.get(), a.lo_.get(), b.hi_.get(), MPFR_RNDD);
    mpfr_sub(r.hi_.get(), a.hi_.get(), b.lo_.get(), MPFR_RNDU);
    return r;
  }

  friend Interval operator-(const Interval& a) {
    Interval r(a.precision());
    mpfr_neg(r.lo_.get(), a.hi_.get(), MPFR_RNDD);
    mpfr_neg(r.hi_.get(), a.lo_.get(), MPFR_RNDU);
    return r;
  }

  friend Interval operator*(const Interval& a, const Interval& b) {
    const mpfr_prec_t prec = a.precision();
    Interval r(prec);
    BigFloat t(prec);
    // Four endpoint products; take min rounded down and max rounded up.
    bool first = true;
    for (mpfr_srcptr x : {a.lo_.get(), a.hi_.get()}) {
      for (mpfr_srcptr y : {b.lo_.get(), b.hi_.get()}) {
        mpfr_mul(t.get(), x, y, MPFR_RNDD);
        if (first || mpfr_less_p(t.get(), r.lo_.get())) mpfr_set(r.lo_.get(), t.get(), MPFR_RNDD);
        mpfr_mul(t.get(), x, y, MPFR_RNDU);
        if (first || mpfr_greater_p(t.get(), r.hi_.get())) mpfr_set(r.hi_.get(), t.get(), MPFR_RNDU);
        first = false;
      }
    }
    return r;
  }

  friend Interval operator/(const Interval& a, const Interval& b) {
    if (mpfr_sgn(b.lo_.get()) <= 0 && mpfr_sgn(b.hi_.get()) >= 0) {
      throw Error(ErrorCode::BadDomain, "interval division by an interval containing 0");
    }
    const mpfr_prec_t prec = a.precision();
    Interval inv(prec);
    mpfr_ui_div(inv.lo_.get(), 1, b.hi_.get(), MPFR_RNDD);
    mpfr_ui_div(inv.hi_.get(), 1, b.lo_.get(), MPFR_RNDU);
    return a * inv;
  }

  friend Interval log(const Interval& a) {
    if (!a.certainly_positive()) throw Error(ErrorCode::BadDomain, "log of a non-positive interval");
    Interval r(a.precision());
    mpfr_log(r.lo_.get(), a.lo_.get(), MPFR_RNDD);
    mpfr_log(r.hi_.get(), a.hi_.get(), MPFR_RNDU);
    return r;
  }

  friend Interval exp(const Interval& a) {
    Interval r(a.precision());
    mpfr_exp(r.lo_.get(), a.lo_.get(), MPFR_RNDD);
    mpfr_exp(r.hi_.get(), a.hi_.get(), MPFR_RNDU);
    return r;
  }

  friend Interval max(const Interval& a, const Interval& b) {
    Interval r(a.precision());
    mpfr_max(r.lo_.get(), a.lo_.get(), b.lo_.get(), MPFR_RNDD);
    mpfr_max(r.hi_.get(), a.hi_.get(), b.hi_.get(), MPFR_RNDU);
    return r;
  }

 private:
  BigFloat lo_;
  BigFloat hi_;
};

}  // namespace aon::ia
