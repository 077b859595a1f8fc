// SPDX-License-Identifier: Apache-2.0
#include "qbil/qseries/qpoch.hpp"

#include <cmath>
#include <string>

namespace qbil {

Complex qpoch_finite(const Complex& a, const Real& q, long n, const PrecisionContext& ctx) {
  const mpfr_prec_t bits = std::max(ctx.bits(), a.bits());
  Complex acc(1L, bits);
  if (n >= 0) {
    Complex x = a.with_bits(bits);
    for (long k = 0; k < n; ++k) {
      acc *= 1L - x;
      x *= q;
    }
    return acc;
  }
  Real qinv = Real(1L, bits) / q;
  Complex x = a.with_bits(bits) * qinv;
  for (long k = 1; k <= -n; ++k) {
    Complex f = 1L - x;
    if (f.is_zero()) throw PoleError("(a; q)_n with n < 0: factor 1 - a q^-" + std::to_string(k) + " vanishes");
    acc *= f;
    x *= qinv;
  }
  return Complex(1L, bits) / acc;
}

Estimate qpoch_inf(const Complex& a, const Real& q, const PrecisionContext& ctx) {
  const mpfr_prec_t bits = std::max(ctx.bits(), a.bits());
  if (a.is_zero()) return Estimate::exact(Complex(1L, bits));
  const Real tol = ctx.tol() / 2L;
  const Real q64 = q.with_bits(64);
  const Real one_minus_q = Real(1L, 64) - q64;
  const Real half(0.5, 64);
  Real xabs = abs(a).with_bits(64);
  Complex prod(1L, bits);
  Complex x = a.with_bits(bits);
  double rel_round = 0.0;
  Real tail(64);
  for (long k = 0;; ++k) {
    if (xabs < half) {
      // sum_{j >= k} |log(1 - a q^j)| <= t; relative error of the tail product <= t/(1-t)
      Real t = xabs / (one_minus_q * (Real(1L, 64) - xabs));
      if (t < half) {
        tail = t / (Real(1L, 64) - t);
        if (tail <= tol) {
          Real m = abs(prod).with_bits(64);
          Real err = m * tail + m * Real(rel_round, 64) * ctx.ulp();
          return {prod, err, k};
        }
      }
    }
    if (k >= kMaxFactors) throw BudgetError("infinite product exceeded factor budget");
    Complex f = 1L - x;
    if (f.is_zero()) return {Complex(bits), Real(64), k + 1};
    prod *= f;
    const double xd = xabs.to_double();
    const double fd = std::hypot(f.re.to_double(), f.im.to_double());
    rel_round += 4.0 + (fd > 0 ? static_cast<double>(k) * xd / fd : 0.0);
    x *= q;
    xabs *= q64;
  }
}

Estimate qpoch_multi(const std::vector<Complex>& as, const Real& q, const PrecisionContext& ctx) {
  Estimate acc = Estimate::exact(Complex(1L, ctx.bits()));
  for (const auto& a : as) acc = mul(acc, qpoch_inf(a, q, ctx));
  return acc;
}

Estimate qpoch_power(int sign, const Real& s, const Real& q, const PrecisionContext& ctx) {
  const mpfr_prec_t bits = ctx.bits();
  Real x(bits);
  if (s.is_integer()) {
    const long k = s.to_long();
    if (sign > 0 && k <= 0) return {Complex(bits), Real(64), 1 - k};
    x = pow(q.with_bits(bits), k);
  } else {
    x = exp(s.with_bits(bits) * log(q.with_bits(bits)));
  }
  if (sign < 0) x = -x;
  return qpoch_inf(Complex(x, Real(bits)), q, ctx);
}

Estimate q_gamma(const Complex& z, const QBase& base, const PrecisionContext& ctx) {
  long n = 0;
  if (z.is_integer(&n) && n <= 0) throw PoleError("q-gamma pole at " + std::to_string(n));
  const mpfr_prec_t bits = ctx.bits();
  const Real& q = base.q();
  const Complex one(1L, bits);
  Estimate num = qpoch_inf(Complex(q, Real(bits)), q, ctx);
  Estimate den = z.is_real() ? qpoch_power(1, z.re, q, ctx)
                             : qpoch_inf(exp(z * log(Complex(q, Real(bits)))), q, ctx);
  Estimate ratio = div(num, den, "(q^z; q)_infinity");
  Complex w = cpow_principal(Complex(Real(1L, bits) - q, Real(bits)), one - z, ctx);
  return scale(ratio, w);
}

}  // namespace qbil
