// SPDX-License-Identifier: Apache-2.0
#include "qbil/numeric/complex.hpp"

#include <climits>

#include "qbil/errors.hpp"

namespace qbil {

bool Complex::is_integer(long* n) const {
  if (!im.is_zero() || !re.is_integer()) return false;
  if (!mpfr_fits_slong_p(re.raw(), MPFR_RNDN)) return false;
  if (n) *n = re.to_long();
  return true;
}

Complex& Complex::operator+=(const Complex& o) {
  re += o.re;
  im += o.im;
  return *this;
}

Complex& Complex::operator-=(const Complex& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

Complex& Complex::operator*=(const Complex& o) { return *this = *this * o; }
Complex& Complex::operator/=(const Complex& o) { return *this = *this / o; }

Complex& Complex::operator*=(const Real& o) {
  re *= o;
  im *= o;
  return *this;
}

Complex& Complex::operator/=(const Real& o) {
  re /= o;
  im /= o;
  return *this;
}

Complex operator*(const Complex& a, const Complex& b) {
  if (a.im.is_zero() && b.im.is_zero()) return Complex(a.re * b.re, Real(std::max(a.bits(), b.bits())));
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

Complex operator/(const Complex& a, const Complex& b) {
  if (b.is_zero()) throw DomainError("complex division by zero");
  if (b.im.is_zero()) return {a.re / b.re, a.im / b.re};
  // scale by the larger component of b to keep the intermediate products in range
  if (abs(b.re) >= abs(b.im)) {
    Real r = b.im / b.re;
    Real d = b.re + b.im * r;
    return {(a.re + a.im * r) / d, (a.im - a.re * r) / d};
  }
  Real r = b.re / b.im;
  Real d = b.re * r + b.im;
  return {(a.re * r + a.im) / d, (a.im * r - a.re) / d};
}

std::string Complex::str(int digits) const {
  std::string s = re.str(digits);
  std::string t = im.str(digits);
  if (t[0] == '-') return s + t + "i";
  return s + "+" + t + "i";
}

Real abs(const Complex& z) {
  Real r(z.bits());
  mpfr_hypot(r.raw(), z.re.raw(), z.im.raw(), MPFR_RNDN);
  return r;
}

Real arg(const Complex& z) {
  if (z.im.is_zero()) {
    Real y(z.bits());  // +0
    return atan2(y, z.re);
  }
  return atan2(z.im, z.re);
}

Complex conj(const Complex& z) { return {z.re, -z.im}; }

Complex exp(const Complex& z) {
  Real m = exp(z.re);
  if (z.im.is_zero()) return Complex(m, Real(z.bits()));
  return {m * cos(z.im), m * sin(z.im)};
}

Complex log(const Complex& z) {
  if (z.is_zero()) throw BranchPointError("log(0)");
  return {log(abs(z)), arg(z)};
}

Complex sqrt(const Complex& z) {
  const mpfr_prec_t b = z.bits();
  if (z.is_zero()) return Complex(b);
  if (z.im.is_zero()) {
    if (z.re.sign() > 0) return Complex(sqrt(z.re), Real(b));
    return Complex(Real(b), sqrt(-z.re));
  }
  Real t = sqrt((abs(z) + abs(z.re)) / 2L);
  if (z.re.sign() >= 0) return {t, z.im / (2L * t)};
  Real u = abs(z.im) / (2L * t);
  return {u, z.im.sign() < 0 ? -t : t};
}

Complex sin(const Complex& z) {
  if (z.im.is_zero()) return Complex(sin(z.re), Real(z.bits()));
  return {sin(z.re) * cosh(z.im), cos(z.re) * sinh(z.im)};
}

Complex cos(const Complex& z) {
  if (z.im.is_zero()) return Complex(cos(z.re), Real(z.bits()));
  return {cos(z.re) * cosh(z.im), -(sin(z.re) * sinh(z.im))};
}

Complex powi(const Complex& z, long n) {
  const mpfr_prec_t b = z.bits();
  if (n == 0) return Complex(1L, b);
  if (z.is_zero()) {
    if (n < 0) throw BranchPointError("0 raised to a negative power");
    return Complex(b);
  }
  unsigned long m = n < 0 ? 0UL - static_cast<unsigned long>(n) : static_cast<unsigned long>(n);
  Complex acc(1L, b);
  Complex base = z;
  while (m) {
    if (m & 1UL) acc *= base;
    m >>= 1;
    if (m) base *= base;
  }
  return n < 0 ? Complex(1L, b) / acc : acc;
}

Complex expi(const Real& t) { return {cos(t), sin(t)}; }

}  // namespace qbil
