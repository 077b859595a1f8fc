// SPDX-License-Identifier: Apache-2.0
#include "qbil/qseries/theta.hpp"

#include <cmath>

#include "qbil/qseries/qpoch.hpp"

namespace qbil {

Estimate theta_series(const Complex& z, const QBase& base, const PrecisionContext& ctx) {
  if (z.is_zero()) throw DomainError("theta: z = 0");
  const mpfr_prec_t bits = ctx.bits();
  const Real& p = base.p();
  const Real q = base.q().with_bits(bits);
  Complex mz = -z.with_bits(bits);
  Complex mzi = Complex(1L, bits) / mz;
  const Real logp = log(p.with_bits(64));
  const Real logr = abs(log(abs(z).with_bits(64)));  // log max(|z|, 1/|z|)
  const Real tol = ctx.tol() / 2L;

  Complex sum(1L, bits);
  Complex tp(1L, bits), tm(1L, bits);  // p^{n^2} (-z)^{+-n}
  Real step = p.with_bits(bits);       // p^{2n+1}
  double abs_sum = 1.0;
  Real maxterm(1L, 64);
  for (long n = 0;; ++n) {
    // tail over |m| > n: 2 p^{(n+1)^2} r^{n+1} / (1 - p^{2n+3} r)
    Real n1(n + 1, 64);
    Real ratio_log = logp * (2 * n + 3) + logr;
    if (ratio_log < Real(-0.7, 64)) {
      Real lead = exp(logp * n1 * n1 + logr * n1);
      Real bound = lead * 2L / (Real(1L, 64) - exp(ratio_log));
      if (bound <= tol * maxterm) {
        Real err = bound + Real(abs_sum * 8.0 * static_cast<double>(n + 1), 64) * ctx.ulp();
        return {sum, err, 2 * n + 1};
      }
    }
    if (n > 100000000) throw BudgetError("theta series exceeded term budget");
    tp *= step;
    tp *= mz;
    tm *= step;
    tm *= mzi;
    step *= q;
    sum += tp;
    sum += tm;
    Real a1 = abs(tp).with_bits(64), a2 = abs(tm).with_bits(64);
    abs_sum += a1.to_double() + a2.to_double();
    maxterm = max(maxterm, max(a1, a2));
  }
}

Estimate theta_product(const Complex& z, const QBase& base, const PrecisionContext& ctx) {
  if (z.is_zero()) throw DomainError("theta: z = 0");
  const mpfr_prec_t bits = ctx.bits();
  Complex pz = z.with_bits(bits) * base.p();
  Complex pzi = Complex(base.p().with_bits(bits), Real(bits)) / z;
  return qpoch_multi({Complex(base.q(), Real(bits)), pz, pzi}, base.q(), ctx);
}

Estimate theta_shift(const Complex& z, long k, const QBase& base, const PrecisionContext& ctx) {
  Estimate t = theta_series(z, base, ctx);
  Complex f = powi(-z.with_bits(ctx.bits()), -k) * Complex(pow(base.p().with_bits(ctx.bits()), -k * k), Real(ctx.bits()));
  return scale(t, f);
}

}  // namespace qbil
