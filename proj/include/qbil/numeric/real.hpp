// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <mpfr.h>

#include <compare>
#include <string>
#include <string_view>

namespace qbil {

/// Binary floating-point number with a per-value precision, backed by MPFR.
///
/// Binary operations round to the larger of the two operand precisions, so a
/// computation started at some precision stays at that precision without any
/// process-wide default.
class Real {
 public:
  explicit Real(mpfr_prec_t bits = 64);
  Real(long value, mpfr_prec_t bits);
  Real(int value, mpfr_prec_t bits) : Real(static_cast<long>(value), bits) {}
  Real(double value, mpfr_prec_t bits);
  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  /// Parses a decimal ("0.25", "-1e-3") or rational ("3/7") literal.
  static Real parse(std::string_view text, mpfr_prec_t bits);

  mpfr_prec_t bits() const { return mpfr_get_prec(v_); }
  /// Rounds the value to a new precision in place.
  void set_bits(mpfr_prec_t bits);
  Real with_bits(mpfr_prec_t bits) const;

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  bool is_integer() const { return mpfr_integer_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  long exponent2() const;  // e with 2^(e-1) <= |x| < 2^e; LONG_MIN for zero

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }
  /// Scientific notation with the given number of significant digits.
  std::string str(int digits) const;
  /// Enough digits to round-trip the value at its precision.
  std::string str() const;

  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);
  Real& operator+=(long o);
  Real& operator-=(long o);
  Real& operator*=(long o);
  Real& operator/=(long o);
  Real operator-() const;

  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);
  friend Real operator+(const Real& a, long b) { Real r(a); r += b; return r; }
  friend Real operator-(const Real& a, long b) { Real r(a); r -= b; return r; }
  friend Real operator*(const Real& a, long b) { Real r(a); r *= b; return r; }
  friend Real operator/(const Real& a, long b) { Real r(a); r /= b; return r; }
  friend Real operator+(long a, const Real& b) { return b + a; }
  friend Real operator-(long a, const Real& b) { return -(b - a); }
  friend Real operator*(long a, const Real& b) { return b * a; }
  friend Real operator/(long a, const Real& b);

  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend std::partial_ordering operator<=>(const Real& a, const Real& b);
  friend bool operator==(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) == 0; }
  friend std::partial_ordering operator<=>(const Real& a, long b);

 private:
  mpfr_t v_;
};

Real abs(const Real& x);
Real sqrt(const Real& x);
Real exp(const Real& x);
Real log(const Real& x);
Real log2(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
Real sinh(const Real& x);
Real cosh(const Real& x);
Real atan2(const Real& y, const Real& x);
Real pow(const Real& x, const Real& y);
Real pow(const Real& x, long n);
Real floor(const Real& x);
Real round(const Real& x);
/// x * 2^e, exact.
Real ldexp(const Real& x, long e);
Real min(const Real& a, const Real& b);
Real max(const Real& a, const Real& b);
Real pi(mpfr_prec_t bits);
/// 2^e at the given precision.
Real pow2(long e, mpfr_prec_t bits);

}  // namespace qbil
