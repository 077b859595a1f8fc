// SPDX-License-Identifier: Apache-2.0
#include "qbil/numeric/precision.hpp"

#include <string>

namespace qbil {
namespace {

Real mag(const Complex& z) { return abs(z).with_bits(64); }

// relative rounding of one complex operation
Real op_ulp(const Complex& v) { return ldexp(mag(v), 2 - static_cast<long>(v.bits())); }

}  // namespace

Real product_error(const Estimate& a, const Estimate& b) {
  return mag(a.value) * b.err + mag(b.value) * a.err + a.err * b.err;
}

Estimate mul(const Estimate& a, const Estimate& b) {
  Complex v = a.value * b.value;
  Real e = product_error(a, b) + op_ulp(v);
  return {std::move(v), std::move(e), a.terms + b.terms};
}

Estimate div(const Estimate& a, const Estimate& b, const char* what) {
  Real db = mag(b.value);
  if (b.value.is_zero() || db <= b.err) throw PoleError(std::string(what) + " vanishes within its error bound");
  Complex v = a.value / b.value;
  Real e = (a.err + mag(v) * b.err) / (db - b.err) + op_ulp(v);
  return {std::move(v), std::move(e), a.terms + b.terms};
}

Estimate add(const Estimate& a, const Estimate& b) {
  Complex v = a.value + b.value;
  Real e = a.err + b.err + op_ulp(v);
  return {std::move(v), std::move(e), a.terms + b.terms};
}

Estimate sub(const Estimate& a, const Estimate& b) {
  Complex v = a.value - b.value;
  Real e = a.err + b.err + op_ulp(v);
  return {std::move(v), std::move(e), a.terms + b.terms};
}

Estimate scale(const Estimate& a, const Complex& c) {
  Complex v = a.value * c;
  Real e = a.err * mag(c) + op_ulp(v);
  return {std::move(v), std::move(e), a.terms};
}

Complex cpow_principal(const Complex& base, const Complex& exponent, const PrecisionContext& ctx) {
  const mpfr_prec_t b = std::max(ctx.bits(), base.bits());
  if (base.is_zero()) {
    if (exponent.re.sign() <= 0) throw BranchPointError("power of zero with non-positive real exponent");
    return Complex(b);
  }
  long n = 0;
  if (exponent.is_integer(&n) && n > -(1L << 20) && n < (1L << 20)) return powi(base.with_bits(b), n);
  Complex x = exponent.with_bits(b + 16) * log(base.with_bits(b + 16));
  return exp(x).with_bits(b);
}

}  // namespace qbil
