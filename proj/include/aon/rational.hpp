#pragma once

#include <aon/error.hpp>

#include <gmpxx.h>
#include <mpfr.h>

#include <array>
#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>
#include <system_error>

namespace aon {

/// True when `text` is an unsigned decimal literal: digits with an optional
/// fraction and exponent ("0.1", "5", ".25", "1e-3").
inline bool is_decimal_literal(std::string_view text) {
  std::size_t i = 0;
  std::size_t digits = 0;
  while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i, ++digits;
  if (i < text.size() && text[i] == '.') {
    ++i;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i, ++digits;
  }
  if (digits == 0) return false;
  if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
    ++i;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
    std::size_t exp_digits = 0;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i, ++exp_digits;
    if (exp_digits == 0) return false;
  }
  return i == text.size();
}

/// The exact rational value of a decimal literal.
inline mpq_class parse_decimal_rational(std::string_view text) {
  if (!is_decimal_literal(text)) {
    throw Error(ErrorCode::ParseError, "not a decimal literal: '" + std::string(text) + "'");
  }
  std::string mantissa;
  long exponent = 0;
  std::size_t i = 0;
  for (; i < text.size() && text[i] != 'e' && text[i] != 'E'; ++i) {
    if (text[i] == '.') continue;
    mantissa.push_back(text[i]);
  }
  const std::size_t dot = text.find('.');
  const std::size_t end_of_mantissa = i;
  if (dot != std::string_view::npos) exponent -= static_cast<long>(end_of_mantissa - dot - 1);
  if (i < text.size()) {
    long e = 0;
    std::string_view rest = text.substr(i + 1);
    if (!rest.empty() && rest.front() == '+') rest.remove_prefix(1);
    const auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), e);
    if (ec != std::errc() || ptr != rest.data() + rest.size() || e > 100000 || e < -100000) {
      throw Error(ErrorCode::ParseError, "exponent out of range in '" + std::string(text) + "'");
    }
    exponent += e;
  }
  mpz_class num(mantissa, 10);
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  mpq_class q = exponent < 0 ? mpq_class(num, scale) : mpq_class(num * scale);
  q.canonicalize();
  return q;
}

/// Shortest decimal string that round-trips to `value`.
inline std::string shortest_decimal(double value) {
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), res.ptr);
}

/// Nearest double, ties to even.
inline double rational_to_double(const mpq_class& q) {
  mpfr_t t;
  mpfr_init2(t, 53);
  mpfr_set_q(t, q.get_mpq_t(), MPFR_RNDN);
  const double d = mpfr_get_d(t, MPFR_RNDN);
  mpfr_clear(t);
  return d;
}

/// The approximation parameter, carried both as the caller's decimal and as
/// an exact rational so that scaled profits can be floored exactly.
class Epsilon {
 public:
  /// Parses a decimal literal such as "0.1"; the value is taken exactly.
  static Epsilon parse(std::string_view text) {
    Epsilon e;
    try {
      e.exact_ = parse_decimal_rational(text);
    } catch (const Error&) {
      throw Error(ErrorCode::EpsilonOutOfRange, "epsilon must be a decimal in (0,1), got '" +
                                                    std::string(text) + "'");
    }
    e.text_ = std::string(text);
    e.check();
    return e;
  }

  /// A double is read through its shortest round-trip decimal, so 0.1 means 1/10.
  static Epsilon from_double(double value) {
    if (!(value > 0.0 && value < 1.0)) {
      throw Error(ErrorCode::EpsilonOutOfRange, "epsilon must lie in (0,1), got " + shortest_decimal(value));
    }
    return parse(shortest_decimal(value));
  }

  const mpq_class& exact() const noexcept { return exact_; }
  double value() const { return rational_to_double(exact_); }
  const std::string& text() const noexcept { return text_; }

 private:
  void check() const {
    if (exact_ <= 0 || exact_ >= 1) {
      throw Error(ErrorCode::EpsilonOutOfRange, "epsilon must lie in (0,1), got " + text_);
    }
  }

  mpq_class exact_;
  std::string text_;
};

inline std::int64_t to_int64(const mpz_class& z) {
  if (!z.fits_slong_p()) throw Error(ErrorCode::CapacityOverflow, "integer exceeds 64-bit range");
  return static_cast<std::int64_t>(z.get_si());
}


inline mpz_class floor_of(const mpq_class& q) {
  mpz_class out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

inline mpz_class ceil_of(const mpq_class& q) {
  mpz_class out;
  mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

}  // namespace aon
