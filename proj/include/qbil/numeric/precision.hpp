// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "qbil/errors.hpp"
#include "qbil/numeric/complex.hpp"

namespace qbil {

/// Working precision plus the tolerance derived from it.
class PrecisionContext {
 public:
  explicit PrecisionContext(mpfr_prec_t bits = 256, mpfr_prec_t guard = 16) : bits_(bits), guard_(guard) {
    if (bits < 64) throw DomainError("precision must be at least 64 bits");
    if (guard < 0 || guard >= bits) throw DomainError("guard bits must lie in [0, bits)");
  }

  mpfr_prec_t bits() const { return bits_; }
  mpfr_prec_t guard() const { return guard_; }
  /// 2^-(bits - guard)
  Real tol() const { return pow2(-(bits_ - guard_), 64); }
  /// Unit roundoff 2^-bits.
  Real ulp() const { return pow2(-bits_, 64); }

  PrecisionContext doubled() const { return PrecisionContext(2 * bits_, guard_); }

  Real real(long v) const { return Real(v, bits_); }
  Real real(double v) const { return Real(v, bits_); }
  Complex complex(long v) const { return Complex(v, bits_); }
  Complex zero() const { return Complex(bits_); }
  Complex one() const { return Complex(1L, bits_); }

 private:
  mpfr_prec_t bits_;
  mpfr_prec_t guard_;
};

/// A value together with a bound on its absolute error.
struct Estimate {
  Complex value;
  Real err{64};
  long terms = 0;  // terms or factors consumed

  static Estimate exact(Complex v) { return {std::move(v), Real(64), 0}; }
};

/// Error bound for a product a*b given bounds on each factor.
Real product_error(const Estimate& a, const Estimate& b);
/// a*b with propagated bound.
Estimate mul(const Estimate& a, const Estimate& b);
/// a/b with propagated bound; PoleError if b may vanish within its bound.
Estimate div(const Estimate& a, const Estimate& b, const char* what = "denominator");
Estimate add(const Estimate& a, const Estimate& b);
Estimate sub(const Estimate& a, const Estimate& b);
Estimate scale(const Estimate& a, const Complex& c);

/// Principal power base^exponent; integer exponents use repeated multiplication.
Complex cpow_principal(const Complex& base, const Complex& exponent, const PrecisionContext& ctx);

}  // namespace qbil
