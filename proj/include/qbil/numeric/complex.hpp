// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <string>

#include "qbil/numeric/real.hpp"

namespace qbil {

/// Complex number over Real. The precision is that of the real part.
class Complex {
 public:
  Real re;
  Real im;

  explicit Complex(mpfr_prec_t bits = 64) : re(bits), im(bits) {}
  explicit Complex(const Real& r) : re(r), im(r.bits()) {}
  Complex(const Real& r, const Real& i) : re(r), im(i) {}
  Complex(long r, mpfr_prec_t bits) : re(r, bits), im(bits) {}
  Complex(double r, double i, mpfr_prec_t bits) : re(r, bits), im(i, bits) {}

  mpfr_prec_t bits() const { return std::max(re.bits(), im.bits()); }
  Complex with_bits(mpfr_prec_t bits) const { return {re.with_bits(bits), im.with_bits(bits)}; }

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  bool is_real() const { return im.is_zero(); }
  bool is_finite() const { return re.is_finite() && im.is_finite(); }
  /// True when the value is an exact integer n; writes n.
  bool is_integer(long* n = nullptr) const;

  Complex& operator+=(const Complex& o);
  Complex& operator-=(const Complex& o);
  Complex& operator*=(const Complex& o);
  Complex& operator/=(const Complex& o);
  Complex& operator*=(const Real& o);
  Complex& operator/=(const Real& o);
  Complex operator-() const { return {-re, -im}; }

  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator*(const Complex& a, const Complex& b);
  friend Complex operator/(const Complex& a, const Complex& b);
  friend Complex operator*(Complex a, const Real& b) { return a *= b; }
  friend Complex operator*(const Real& b, Complex a) { return a *= b; }
  friend Complex operator/(Complex a, const Real& b) { return a /= b; }
  friend Complex operator+(Complex a, long b) { a.re += b; return a; }
  friend Complex operator-(Complex a, long b) { a.re -= b; return a; }
  friend Complex operator-(long a, const Complex& b) { return -(b - a); }
  friend Complex operator+(long a, Complex b) { b.re += a; return b; }
  friend Complex operator*(Complex a, long b) { a.re *= b; a.im *= b; return a; }
  friend Complex operator*(long b, Complex a) { a.re *= b; a.im *= b; return a; }
  friend Complex operator/(Complex a, long b) { a.re /= b; a.im /= b; return a; }
  friend Complex operator/(long a, const Complex& b) { return Complex(a, b.bits()) / b; }

  friend bool operator==(const Complex& a, const Complex& b) { return a.re == b.re && a.im == b.im; }

  /// "re+imi" with the given number of significant digits per part.
  std::string str(int digits) const;
};

Real abs(const Complex& z);
/// Principal argument in (-pi, pi]; a signed-zero imaginary part counts as +0.
Real arg(const Complex& z);
Complex conj(const Complex& z);
Complex exp(const Complex& z);
/// Principal logarithm.
Complex log(const Complex& z);
/// Principal square root.
Complex sqrt(const Complex& z);
Complex sin(const Complex& z);
Complex cos(const Complex& z);
/// z^n by repeated squaring; n may be negative.
Complex powi(const Complex& z, long n);
/// e^{i t}
Complex expi(const Real& t);

}  // namespace qbil
