// SPDX-License-Identifier: Apache-2.0
#include "qbil/numeric/gamma.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace qbil {

long spouge_order(mpfr_prec_t bits) {
  // relative error <= a^{-1/2} (2 pi)^{-(a + 1/2)}
  const double target = static_cast<double>(bits) + 8.0;
  const double l2pi = std::log2(2.0 * M_PI);
  long a = 2;
  while ((static_cast<double>(a) + 0.5) * l2pi + 0.5 * std::log2(static_cast<double>(a)) < target) ++a;
  return a;
}

namespace {

// Gamma(z + 1) for Re z > 0, at working precision wp
Complex spouge_gamma1p(const Complex& z, long a, mpfr_prec_t wp) {
  const Real ar(a, wp);
  Real c0 = sqrt(pi(wp) * 2L);
  Complex sum(c0, Real(wp));
  Real fact(1L, wp);  // (k-1)!
  for (long k = 1; k < a; ++k) {
    if (k > 1) fact *= (k - 1);
    Real base = ar - k;
    Real ck = pow(base, Real(k, wp) - Real(0.5, wp)) * exp(base) / fact;
    if (k % 2 == 0) ck = -ck;
    sum += Complex(ck, Real(wp)) / (z + k);
  }
  Complex za = z + a;
  Complex half(0.5, 0.0, wp);
  return exp((z + half) * log(za) - za) * sum;
}

}  // namespace

Complex gamma(const Complex& z, const PrecisionContext& ctx) {
  long n = 0;
  if (z.is_integer(&n) && n <= 0) throw PoleError("gamma pole at " + std::to_string(n));
  const mpfr_prec_t bits = ctx.bits();
  const mpfr_prec_t wp = 2 * bits + 32;
  const long a = spouge_order(bits);
  Complex x = z.with_bits(wp);
  Real half(0.5, wp);
  if (x.re >= half) {
    Complex g = spouge_gamma1p(x, a, wp) / x;
    return g.with_bits(bits);
  }
  // reflection
  Complex one(1L, wp);
  Complex w = one - x;
  Complex gw = spouge_gamma1p(w, a, wp) / w;
  Complex s = sin(x * pi(wp));
  if (s.is_zero()) throw PoleError("gamma pole (sin(pi z) = 0)");
  Complex g = Complex(pi(wp), Real(wp)) / (s * gw);
  return g.with_bits(bits);
}

Complex shifted_factorial(const Complex& alpha, long n, const PrecisionContext& ctx) {
  const mpfr_prec_t b = std::max(ctx.bits(), alpha.bits());
  Complex acc(1L, b);
  if (n >= 0) {
    for (long k = 0; k < n; ++k) acc *= alpha + k;
    return acc;
  }
  for (long k = 1; k <= -n; ++k) {
    Complex f = alpha - k;
    if (f.is_zero()) throw PoleError("shifted factorial: factor alpha - " + std::to_string(k) + " vanishes");
    acc *= f;
  }
  return Complex(1L, b) / acc;
}

}  // namespace qbil
