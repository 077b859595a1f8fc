// SPDX-License-Identifier: Apache-2.0
#include "qbil/numeric/classical.hpp"

#include <climits>
#include <cmath>
#include <string>
#include <vector>

#include "qbil/numeric/gamma.hpp"

namespace qbil {
namespace {

struct SideSum {
  Complex sum;
  Real err;
  long terms;
};

double dabs(const Complex& z) { return std::hypot(z.re.to_double(), z.im.to_double()); }

// Sum over n >= 1 of (A)_n/(C)_n z^n where |z| = 1 and s = Re(sum C - sum A) > 1.
// `abel_cma` (1H1 only) enables the summation-by-parts bound with c - a.
SideSum one_side(const std::vector<Complex>& A, const std::vector<Complex>& C, const Complex& z,
                 const PrecisionContext& ctx, long budget, const Real& target, const Real& s,
                 const Complex* abel_cma) {
  const mpfr_prec_t bits = ctx.bits();
  long kA = LONG_MAX, kC = LONG_MAX, k = 0;
  for (const auto& a : A)
    if (a.is_integer(&k) && k <= 0) kA = std::min(kA, -k);
  for (const auto& c : C)
    if (c.is_integer(&k) && k <= 0) kC = std::min(kC, -k);
  if (kC < kA) throw PoleError("bilateral sum: denominator shifted factorial vanishes at n = " + std::to_string(kC + 1));

  Complex t(1L, bits), sum(bits), zn(1L, bits);
  double abs_sum = 0.0;
  const double round_per_term = 4.0 * static_cast<double>(A.size() + C.size() + 2);
  auto round_err = [&](long n) {
    return Real(round_per_term * static_cast<double>(n) * abs_sum, 64) * ctx.ulp();
  };

  if (kA != LONG_MAX) {
    if (kA > budget) throw BudgetError("bilateral sum: finite sum of " + std::to_string(kA) + " terms exceeds budget");
    for (long n = 1; n <= kA; ++n) {
      for (const auto& a : A) t *= a + (n - 1);
      for (const auto& c : C) t /= c + (n - 1);
      t *= z;
      sum += t;
      abs_sum += dabs(t);
    }
    return {sum, round_err(kA), kA};
  }

  double amax = 0.0, cmax = 0.0, M = 0.0;
  for (const auto& a : A) {
    amax = std::max(amax, dabs(a));
    M += dabs(a) * dabs(a);
  }
  for (const auto& c : C) {
    cmax = std::max(cmax, dabs(c));
    M += 4.0 * dabs(c) * dabs(c);
  }
  // monotone tail estimate |t_m| <= |t_n| e^{M/(n-1)} (n/m)^s needs n >= 5|c|, 2|a|
  const long nmin = 2 + static_cast<long>(std::ceil(std::max(5.0 * cmax, 2.0 * amax)));
  const Real s64 = s.with_bits(64);
  Real abel_pref(64);
  if (abel_cma) abel_pref = Real(2.0 * dabs(*abel_cma), 64) / abs(Complex(1L, bits) - z).with_bits(64);

  Real bound(64);
  for (long n = 1;; ++n) {
    if (n > budget) {
      throw BudgetError("bilateral sum: " + std::to_string(budget) + " terms per direction give tail bound " +
                        bound.str(3) + " above target " + target.str(3));
    }
    const Complex& znz = z;
    for (const auto& a : A) t *= a + (n - 1);
    for (const auto& c : C) t /= c + (n - 1);
    zn *= znz;
    Complex term = t * zn;
    sum += term;
    abs_sum += dabs(term);
    if (n < nmin || (n % 16 != 0 && n != nmin)) continue;
    Real tn = abs(t).with_bits(64);
    Real growth = exp(Real(M / static_cast<double>(n - 1), 64));
    Real nr(n, 64);
    bound = tn * growth * nr / (s64 - 1L);
    if (abel_cma) {
      Real shrink = Real(1L, 64) - Real(cmax / static_cast<double>(n), 64);
      Real ab = abel_pref * tn * growth / (s64 * shrink);
      bound = min(bound, ab);
    }
    Real scale = max(Real(1L, 64), abs(sum + 1L).with_bits(64));
    Real total = bound + round_err(n);
    if (total <= target * scale) return {sum, total, n};
  }
}

void require_unit_circle(const Complex& z, const PrecisionContext& ctx, const char* who) {
  Real dev = abs(abs(z) - 1L);
  if (dev > ctx.tol() * 8L) throw DomainError(std::string(who) + ": requires |z| = 1");
}

Real effective_target(double target, const PrecisionContext& ctx) {
  return target > 0.0 ? Real(target, 64) : ctx.tol();
}

}  // namespace

Estimate eval_1H1(const Complex& a, const Complex& c, const Complex& z, const PrecisionContext& ctx, long max_terms,
                  double target) {
  require_unit_circle(z, ctx, "1H1");
  const Complex one(1L, ctx.bits());
  if (abs(z - one) <= ctx.tol()) throw DomainError("1H1: z = 1 is excluded");
  Complex cma = c - a;
  Real s = cma.re;
  if (s <= 1L) throw DomainError("1H1: requires Re(c - a) > 1, got " + s.str(6));
  const Real tgt = effective_target(target, ctx) / 2L;
  const long half = std::max(1L, max_terms / 2);
  SideSum pos = one_side({a}, {c}, z, ctx, half, tgt, s, &cma);
  SideSum neg = one_side({one - c}, {one - a}, one / z, ctx, half, tgt, s, &cma);
  Complex v = one + pos.sum + neg.sum;
  return {v, pos.err + neg.err, 1 + pos.terms + neg.terms};
}

Estimate eval_2H2(const Complex& a, const Complex& b, const Complex& c, const Complex& d, const Complex& z,
                  const PrecisionContext& ctx, long max_terms, double target) {
  require_unit_circle(z, ctx, "2H2");
  const Complex one(1L, ctx.bits());
  Real s = (c + d - a - b).re;
  if (s <= 1L) throw DomainError("2H2: requires Re(c + d - a - b) > 1, got " + s.str(6));
  const Real tgt = effective_target(target, ctx) / 2L;
  const long half = std::max(1L, max_terms / 2);
  SideSum pos = one_side({a, b}, {c, d}, z, ctx, half, tgt, s, nullptr);
  SideSum neg = one_side({one - c, one - d}, {one - a, one - b}, one / z, ctx, half, tgt, s, nullptr);
  Complex v = one + pos.sum + neg.sum;
  return {v, pos.err + neg.err, 1 + pos.terms + neg.terms};
}

Estimate horn_closed_form(const Complex& a, const Complex& c, const Complex& z, const PrecisionContext& ctx) {
  const Complex one(1L, ctx.bits());
  if (z.is_zero()) throw BranchPointError("Horn: z = 0");
  if (z == one) throw DomainError("Horn: z = 1 is excluded");
  if ((c - a).re <= 1L) throw DomainError("Horn: requires Re(c - a) > 1");
  Complex v = cpow_principal(one - z, c - a - one, ctx) / cpow_principal(-z, c - one, ctx) * gamma(one - a, ctx) *
              gamma(c, ctx) / gamma(c - a, ctx);
  Real err = abs(v).with_bits(64) * ctx.ulp() * 64L;
  return {v, err, 0};
}

Estimate dougall_closed_form(const Complex& a, const Complex& b, const Complex& c, const Complex& d,
                             const PrecisionContext& ctx) {
  const Complex one(1L, ctx.bits());
  if ((c + d - a - b).re <= 1L) throw DomainError("Dougall: requires Re(c + d - a - b) > 1");
  Complex num = gamma(one - a, ctx) * gamma(one - b, ctx) * gamma(c, ctx) * gamma(d, ctx) *
                gamma(c + d - a - b - one, ctx);
  Complex den = gamma(c - a, ctx) * gamma(c - b, ctx) * gamma(d - a, ctx) * gamma(d - b, ctx);
  Complex v = num / den;
  Real err = abs(v).with_bits(64) * ctx.ulp() * 128L;
  return {v, err, 0};
}

}  // namespace qbil
