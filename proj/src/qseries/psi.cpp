// SPDX-License-Identifier: Apache-2.0
#include "qbil/qseries/psi.hpp"

#include <cmath>
#include <string>

#include "qbil/qseries/qpoch.hpp"

namespace qbil {
namespace {

// smallest k >= kmin with c q^{sign k} = 1 to within the tolerance, or -1
long unit_power(const Complex& c, const Real& q, int sign, long kmin, const PrecisionContext& ctx) {
  if (c.is_zero()) return -1;
  const double lc = std::log(abs(c).to_double());
  const double lq = std::log(q.to_double());
  const double kd = sign > 0 ? -lc / lq : lc / lq;
  if (!std::isfinite(kd) || kd < static_cast<double>(kmin) - 0.5 || kd > 1e7) return -1;
  const long k = std::lround(kd);
  Complex x = c * pow(q.with_bits(ctx.bits()), sign * k);
  if (abs(1L - x) <= ctx.tol() * 4L) return k;
  return -1;
}

bool near_zero(const Complex& f, const PrecisionContext& ctx) { return abs(f) <= ctx.tol() * 4L; }

double dabs(const Complex& z) { return std::hypot(z.re.to_double(), z.im.to_double()); }

}  // namespace

Estimate psi_bilateral(const PsiSpec& spec, const Real& q, const Complex& z, const PrecisionContext& ctx,
                       const PsiOptions& opts) {
  const mpfr_prec_t bits = ctx.bits();
  const long r = static_cast<long>(spec.a.size()), s = static_cast<long>(spec.b.size());
  if (r > s) throw DomainError("psi: more numerator than denominator parameters diverges for z != 0");
  if (z.is_zero()) throw DomainError("psi: z = 0");
  const long d = s - r;
  const Real margin = opts.override_margin ? Real(0L, 64) : Real(opts.margin, 64);
  const Real zabs = abs(z).with_bits(64);

  bool pos_finite = false, neg_finite = false;
  for (const auto& a : spec.a) pos_finite = pos_finite || unit_power(a, q, 1, 0, ctx) >= 0;
  for (const auto& b : spec.b) neg_finite = neg_finite || unit_power(b, q, -1, 1, ctx) >= 0;

  if (d == 0 && !pos_finite && !(zabs < Real(1L, 64) - margin))
    throw DomainError("psi: |z| = " + zabs.str(6) + " is not inside |z| < 1 (margin " + margin.str(2) + ")");
  if (!neg_finite) {
    Real pa(1L, 64), pb(1L, 64);
    for (const auto& a : spec.a) pa *= abs(a).with_bits(64);
    for (const auto& b : spec.b) pb *= abs(b).with_bits(64);
    if (pa.is_zero() || !(pb / pa < zabs * (Real(1L, 64) - margin)))
      throw DomainError("psi: |z| = " + zabs.str(6) + " is not above |b1...bs/a1...ar| = " +
                        (pa.is_zero() ? std::string("inf") : (pb / pa).str(6)) + " (margin " + margin.str(2) + ")");
  }

  const Real tol = (opts.target > 0 ? Real(opts.target, 64) : ctx.tol()) / 4L;
  const Real q64 = q.with_bits(64);
  const Real one64(1L, 64);
  Complex sum(1L, bits);
  double abs_sum = 1.0;
  Real maxterm(1L, 64);
  long used = 1;
  Real tail_pos(64), tail_neg(64);

  // n >= 0: t_{n+1} = t_n prod(1 - a q^n)/prod(1 - b q^n) z (-q^n)^d
  {
    Complex t(1L, bits);
    std::vector<Complex> aq, bq;
    for (const auto& a : spec.a) aq.push_back(a.with_bits(bits));
    for (const auto& b : spec.b) bq.push_back(b.with_bits(bits));
    Real qn(1L, bits), qn64(1L, 64);
    Complex zz = z.with_bits(bits);
    for (long n = 0;; ++n) {
      bool stop = false;
      for (const auto& x : aq) {
        if (near_zero(1L - x, ctx)) stop = true;
      }
      if (stop) {
        tail_pos = Real(64);
        break;
      }
      // bound on the remaining ratios |t_{m+1}/t_m|, m >= n
      Real rho = zabs * pow(qn64, d);
      bool valid = true;
      for (const auto& a : spec.a) rho *= one64 + abs(a).with_bits(64) * qn64;
      for (const auto& b : spec.b) {
        Real bb = abs(b).with_bits(64) * qn64;
        if (!(bb < one64)) valid = false;
        else rho /= one64 - bb;
      }
      if (valid && rho < one64) {
        Real tn = abs(t).with_bits(64);
        tail_pos = tn * rho / (one64 - rho);
        if (tail_pos <= tol * maxterm) break;
      }
      if (used >= opts.max_terms) throw BudgetError("psi: term budget " + std::to_string(opts.max_terms) + " exhausted on the n > 0 side");
      for (const auto& x : aq) t *= 1L - x;
      for (const auto& x : bq) {
        Complex f = 1L - x;
        if (near_zero(f, ctx)) throw PoleError("psi: denominator factor (b; q)_n vanishes at n = " + std::to_string(n + 1));
        t /= f;
      }
      t *= zz;
      if (d > 0) t *= Complex(pow(qn, d), Real(bits)) * ((d % 2) ? -1L : 1L);
      sum += t;
      ++used;
      double ta = dabs(t);
      abs_sum += ta;
      if (ta > maxterm.to_double()) maxterm = Real(ta, 64);
      for (auto& x : aq) x *= q;
      for (auto& x : bq) x *= q;
      qn *= q;
      qn64 *= q64;
    }
  }

  // n = -m <= 0: t_{-m-1} = t_{-m} prod(1 - b q^{-m-1})/prod(1 - a q^{-m-1}) z^{-1} (-q^{m+1})^d
  {
    Complex t(1L, bits);
    const Real qinv = Real(1L, bits) / q;
    std::vector<Complex> ay, by;
    for (const auto& a : spec.a) ay.push_back(a.with_bits(bits) * qinv);
    for (const auto& b : spec.b) by.push_back(b.with_bits(bits) * qinv);
    Real qm1(q.with_bits(bits)), qm164(q64);  // q^{m+1}
    Complex zi = Complex(1L, bits) / z;
    for (long m = 0;; ++m) {
      bool stop = false;
      for (const auto& y : by) {
        if (near_zero(1L - y, ctx)) stop = true;
      }
      if (stop) {
        tail_neg = Real(64);
        break;
      }
      Real rho = one64 / zabs;
      bool valid = true;
      for (const auto& b : spec.b) rho *= abs(b).with_bits(64) + qm164;
      for (const auto& a : spec.a) {
        Real aa = abs(a).with_bits(64);
        if (!(aa > qm164)) valid = false;
        else rho /= aa - qm164;
      }
      if (valid && rho < one64) {
        Real tn = abs(t).with_bits(64);
        tail_neg = tn * rho / (one64 - rho);
        if (tail_neg <= tol * maxterm) break;
      }
      if (used >= opts.max_terms) throw BudgetError("psi: term budget " + std::to_string(opts.max_terms) + " exhausted on the n < 0 side");
      for (const auto& y : by) t *= 1L - y;
      for (const auto& y : ay) {
        Complex f = 1L - y;
        if (near_zero(f, ctx)) throw PoleError("psi: factor (a; q)_n vanishes at n = -" + std::to_string(m + 1));
        t /= f;
      }
      t *= zi;
      if (d > 0) t *= Complex(pow(qm1, d), Real(bits)) * ((d % 2) ? -1L : 1L);
      sum += t;
      ++used;
      double ta = dabs(t);
      abs_sum += ta;
      if (ta > maxterm.to_double()) maxterm = Real(ta, 64);
      for (auto& y : ay) y *= qinv;
      for (auto& y : by) y *= qinv;
      qm1 *= q;
      qm164 *= q64;
    }
  }

  const double c = 4.0 * static_cast<double>(r + s + 3);
  Real round = Real(c * static_cast<double>(used) * abs_sum, 64) * ctx.ulp();
  return {sum, tail_pos + tail_neg + round, used};
}

Estimate ramanujan_rhs(const Complex& a, const Complex& b, const Real& q, const Complex& z,
                       const PrecisionContext& ctx) {
  const mpfr_prec_t bits = ctx.bits();
  if (a.is_zero() || z.is_zero()) throw DomainError("Ramanujan sum: a and z must be nonzero");
  Real zabs = abs(z);
  if (!(abs(b / a) < zabs) || !(zabs < 1L)) throw DomainError("Ramanujan sum: requires |b/a| < |z| < 1");
  Complex qc(q.with_bits(bits), Real(bits));
  Complex az = a * z;
  Estimate num = qpoch_multi({qc, b / a, az, qc / az}, q, ctx);
  Estimate den = qpoch_multi({b, qc / a, z, b / az}, q, ctx);
  if (den.value.is_zero()) throw PoleError("Ramanujan sum: denominator product vanishes");
  return div(num, den, "Ramanujan denominator product");
}

}  // namespace qbil
