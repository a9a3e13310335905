#pragma once

// Exact integer/rational helpers shared by every module.

#include <gmpxx.h>

#include <array>
#include <charconv>
#include <cmath>
#include <string>
#include <vector>

#include "ddr/error.hpp"

namespace ddr {

using Integer = mpz_class;
using Rational = mpq_class;

inline Integer factorial(unsigned long m) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), m);
  return r;
}

/// C(n, k) for integer n >= 0; zero when k < 0 or k > n.
inline Integer binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

/// Generalized binomial x(x-1)...(x-j+1)/j! for a rational x.
inline Rational generalized_binomial(const Rational& x, long j) {
  if (j < 0) return 0;
  Rational r = 1;
  for (long i = 0; i < j; ++i) r *= x - i;
  r /= Rational(factorial(static_cast<unsigned long>(j)));
  r.canonicalize();
  return r;
}

inline Integer ipow(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Rational rpow(const Rational& base, unsigned long e) {
  Rational r = 1;
  for (unsigned long i = 0; i < e; ++i) r *= base;
  return r;
}

/// a/b in lowest terms.
inline Rational ratio(const Integer& a, const Integer& b) {
  Rational r(a, b);
  r.canonicalize();
  return r;
}

/// The rational of least denominator in [lo, hi] (continued-fraction descent).
inline Rational simplest_rational(const Rational& lo, const Rational& hi) {
  if (sgn(lo) <= 0 && sgn(hi) >= 0) return 0;
  if (sgn(hi) < 0) return -simplest_rational(-hi, -lo);
  Integer c;
  mpz_cdiv_q(c.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
  if (c <= hi) return Rational(c);
  Integer a = c - 1;
  return Rational(a) + 1 / simplest_rational(1 / (hi - a), 1 / (lo - a));
}

inline int sign(const Rational& v) { return sgn(v); }

inline double to_double(const Rational& v) { return v.get_d(); }
inline double to_double(const Integer& v) { return v.get_d(); }

/// Largest integer <= v.
inline Integer floor_of(const Rational& v) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
  return r;
}

/// Nearest integer, halves rounded away from zero.
inline Integer round_of(const Rational& v) {
  Rational h = v + (sgn(v) >= 0 ? Rational(1, 2) : Rational(-1, 2));
  Integer r;
  mpz_tdiv_q(r.get_mpz_t(), h.get_num_mpz_t(), h.get_den_mpz_t());
  return r;
}

/// Parses "a", "a/b" or a plain decimal such as "0.3" / "-1.25e-2" into an exact rational.
inline Rational parse_rational(const std::string& text) {
  auto fail = [&] { return Error(ErrorKind::invalid_parameters, "not a rational number: '" + text + "'"); };
  if (text.empty()) throw fail();
  if (text.find('/') != std::string::npos) {
    Rational r;
    if (r.set_str(text, 10) != 0) throw fail();
    if (r.get_den() == 0) throw fail();
    r.canonicalize();
    return r;
  }
  std::string mant = text;
  long exp10 = 0;
  if (auto e = mant.find_first_of("eE"); e != std::string::npos) {
    try {
      std::size_t used = 0;
      exp10 = std::stol(mant.substr(e + 1), &used);
      if (used != mant.size() - e - 1) throw fail();
    } catch (const std::logic_error&) {
      throw fail();
    }
    mant = mant.substr(0, e);
  }
  bool negative = false;
  if (!mant.empty() && (mant[0] == '-' || mant[0] == '+')) {
    negative = mant[0] == '-';
    mant.erase(0, 1);
  }
  std::string digits;
  bool seen_dot = false;
  for (char c : mant) {
    if (c == '.' && !seen_dot) {
      seen_dot = true;
    } else if (c >= '0' && c <= '9') {
      digits += c;
      if (seen_dot) --exp10;
    } else {
      throw fail();
    }
  }
  if (digits.empty()) throw fail();
  Rational r{Integer(digits, 10)};
  Rational scale = exp10 >= 0 ? Rational(ipow(10, static_cast<unsigned long>(exp10)))
                              : Rational(Integer(1), ipow(10, static_cast<unsigned long>(-exp10)));
  r *= scale;
  r.canonicalize();
  return negative ? Rational(-r) : r;
}

/// Locale-independent fixed-point rendering.
inline std::string format_decimal(double v, int precision = 6) {
  std::array<char, 64> buf{};
  auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::fixed, precision);
  return std::string(buf.data(), res.ptr);
}

/// Locale-independent shortest round-trip rendering.
inline std::string format_double(double v) {
  std::array<char, 64> buf{};
  auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), res.ptr);
}

/// Always "num/den", even for integers.
inline std::string exact_string(const Rational& v) {
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

/// "1459/2048 (0.712402)"
inline std::string format_rational(const Rational& v) {
  return exact_string(v) + " (" + format_decimal(to_double(v)) + ")";
}

}  // namespace ddr
