// SPDX-License-Identifier: Apache-2.0
#include "qbil/limit/limit_lab.hpp"

#include <cmath>
#include <string>

#include "qbil/numeric/classical.hpp"
#include "qbil/numeric/gamma.hpp"
#include "qbil/qseries/qpoch.hpp"

namespace qbil {

namespace {

constexpr double kUnitSlack = 1e-20;

bool is_cor2(IdentityId id) {
  if (id == IdentityId::COR1) return false;
  if (id == IdentityId::COR2) return true;
  throw DomainError("limit lab works with COR1 or COR2 only");
}

Estimate scaled(const Estimate& e, const Real& r) { return scale(e, Complex(r)); }

Real rounding(const Complex& v, const PrecisionContext& ctx) { return abs(v).with_bits(64) * ctx.ulp() * 64L; }

}  // namespace

LimitParams LimitParams::make(const Real& b, const Complex& w, const PrecisionContext& ctx) {
  if (!(b > 0L)) throw DomainError("b must be positive");
  if (abs(abs(w).with_bits(64) - 1L) > Real(kUnitSlack, 64))
    throw DomainError("|w| must be 1 (1H1 converges only on the unit circle)");
  if ((w - 1L).is_zero()) throw DomainError("w must differ from 1");
  return {b.with_bits(ctx.bits()), w.with_bits(ctx.bits())};
}

ConstrainedParams signed_params(const Real& b, const Complex& w, const QBase& base, const PrecisionContext& ctx) {
  Real qb = pow(base.q().with_bits(ctx.bits()), b.with_bits(ctx.bits()));
  return ConstrainedParams::make(base, Complex(-qb), w, ctx);
}

Real weight(const Real& b, const Real& q) { return pow(1L - q * q, b * 2L + 1L); }

Estimate weighted_side(Side side, IdentityId id, const LimitParams& lp, const QBase& base, const PrecisionContext& ctx,
                       const PsiOptions& opts) {
  is_cor2(id);
  (void)opts;
  ConstrainedParams c = signed_params(lp.b, lp.w, base, ctx);
  Estimate v = eval_side(id, side, c, ctx).front();
  return scaled(v, weight(lp.b, base.q().with_bits(ctx.bits())));
}

Estimate normalized_side(Side side, IdentityId id, const LimitParams& lp, const QBase& base,
                         const PrecisionContext& ctx, const PsiOptions& opts) {
  const bool second = is_cor2(id);
  const mpfr_prec_t bits = ctx.bits();
  const Real q = base.q().with_bits(bits);
  const Real b = lp.b.with_bits(bits);
  const Real half(0.5, bits);
  const Real zabs = pow(q, b + half);
  if (!opts.override_margin && !(zabs < Real(1.0 - opts.margin, bits))) {
    double qmax = std::pow(1.0 - opts.margin, 1.0 / (b.to_double() + 0.5));
    throw DomainError("q^(b+1/2) too close to 1 for the series margin; need q < " + std::to_string(qmax));
  }
  const Real W = weight(b, q);
  const Real om = 1L - q;
  Estimate qq = qpoch_inf(Complex(q), q, ctx);
  // 1/Gamma_q(-b) without the (q^-b; q) factor: 1/((q;q)(1-q)^{1+b})
  Estimate inv_norm = div(Estimate::exact(ctx.one()), scaled(qq, pow(om, b + 1L)), "(q; q)");
  Estimate neg_mb = qpoch_power(-1, -b, q, ctx);  // (-q^-b; q)

  if (side == Side::LHS) {
    const Complex z = Complex(zabs) * lp.w;
    const Real qmb = pow(q, -b), qb1 = pow(q, b + 1L);
    Estimate gq = q_gamma(Complex(b + 1L), base, ctx);
    Estimate first = div(Estimate::exact(Complex(pow(1L + q, b * 2L + 1L))), gq, "Gamma_q(b+1)");
    first = mul(first, psi_bilateral(PsiSpec{{Complex(qmb)}, {Complex(qb1)}}, q, z, ctx, opts));
    Estimate pole = qpoch_power(1, -b, q, ctx);  // (q^-b; q), exactly 0 at integer b
    Estimate total = first;
    if (!(pole.value.is_zero() && pole.err.is_zero())) {
      Estimate coef = mul(scaled(pole, W), inv_norm);
      coef = mul(coef, div(qpoch_power(-1, b + 1L, q, ctx), neg_mb, "(-q^-b; q)"));
      Estimate s2 = psi_bilateral(PsiSpec{{Complex(-qmb)}, {Complex(-qb1)}}, q, z, ctx, opts);
      total = second ? sub(first, mul(coef, s2)) : add(first, mul(coef, s2));
    }
    return scale(total, Complex(half));
  }

  const Real q2 = q * q;
  const Real sh = second ? Real(1.5, bits) : half;
  const Real lo = pow(q, sh - b), hi = pow(q, sh + b);
  const Complex &w = lp.w;
  const Complex wi = 1L / w;
  Estimate t = div(qpoch_multi({Complex(lo) * wi, Complex(lo) * w}, q2, ctx),
                   qpoch_multi({Complex(hi) * w, Complex(hi) * wi}, q2, ctx), "(q^(b+k) w, q^(b+k)/w; q^2)");
  Estimate odd = div(qpoch_inf(Complex(q2), q2, ctx), qpoch_inf(Complex(q), q2, ctx), "(q; q^2)");
  Estimate r = mul(scaled(inv_norm, W), odd);
  r = mul(r, div(qpoch_power(1, (b * 2L + 1L) / 2L, q2, ctx), neg_mb, "(-q^-b; q)"));
  r = mul(r, t);
  if (second) r = scaled(r, pow(q, -b));
  return r;
}

std::vector<QBase> q_sequence(long k_min, long k_max, const PrecisionContext& ctx) {
  std::vector<QBase> out;
  for (long k = k_min; k <= k_max; ++k) out.push_back(QBase::from_q(1L - pow2(-k, ctx.bits())));
  return out;
}

Estimate richardson_extrapolate(const std::vector<std::pair<Real, Complex>>& points, long order) {
  if (order < 1) throw InsufficientDataError("extrapolation order must be at least 1");
  if (static_cast<long>(points.size()) < order + 1)
    throw InsufficientDataError("need " + std::to_string(order + 1) + " points, have " +
                                std::to_string(points.size()));
  const size_t n = static_cast<size_t>(order) + 1, off = points.size() - n;
  std::vector<Complex> P, prev;
  std::vector<Real> x;
  for (size_t i = 0; i < n; ++i) {
    x.push_back(points[off + i].first);
    P.push_back(points[off + i].second);
  }
  for (size_t m = 1; m < n; ++m) {
    prev = P;
    for (size_t i = 0; i + m < n; ++i) {
      const Real &xi = x[i], &xj = x[i + m];
      P[i] = (prev[i] * (-xj) + prev[i + 1] * xi) / (xi - xj);
    }
    P.resize(n - m);
  }
  // prev[1] is the next lower order extrapolant on the newest points
  Estimate e{P[0], abs(P[0] - prev[1]).with_bits(64), static_cast<long>(n)};
  return e;
}

Estimate mainlim2_rhs(const LimitParams& lp, const PrecisionContext& ctx) {
  const mpfr_prec_t bits = ctx.bits();
  const Real b = lp.b.with_bits(bits);
  const Real half(0.5, bits);
  Complex g = gamma(Complex(half), ctx) / gamma(Complex(b + half), ctx);
  Complex v = g * cpow_principal(-lp.w, Complex(-b), ctx) * cpow_principal(1L - lp.w, Complex(b * 2L), ctx);
  return {v, rounding(v, ctx), 0};
}

Estimate mainlim2_lhs_via_H(const LimitParams& lp, const PrecisionContext& ctx, long max_terms, double target) {
  const Real b = lp.b.with_bits(ctx.bits());
  Estimate h = eval_1H1(Complex(-b), Complex(b + 1L), lp.w, ctx, max_terms, target);
  Complex f = Complex(pow(Real(2L, ctx.bits()), b * 2L + 1L)) / gamma(Complex(b + 1L), ctx);
  return scale(h, f);
}

LimitTable limit_report(const LimitParams& lp, long k_min, long k_max, const PrecisionContext& ctx,
                        const LimitOptions& opts) {
  LimitTable tab;
  tab.params = lp;
  tab.identity = opts.identity;
  PsiOptions po;
  po.max_terms = opts.max_terms;
  po.target = opts.series_target;
  std::vector<std::pair<Real, Complex>> lpts, rpts;
  bool all_ok = true;
  long k = k_min;
  for (const QBase& base : q_sequence(k_min, k_max, ctx)) {
    LimitRow row;
    row.k = k++;
    row.q = base.q();
    try {
      row.lhs = normalized_side(Side::LHS, opts.identity, lp, base, ctx, po);
      row.rhs = normalized_side(Side::RHS, opts.identity, lp, base, ctx, po);
      row.ratio = row.lhs.value / row.rhs.value;
      Real la = abs(row.lhs.value).with_bits(64), ra = abs(row.rhs.value).with_bits(64);
      row.ratio_err = abs(row.ratio).with_bits(64) * (row.lhs.err / la + row.rhs.err / ra);
      row.ok = abs(row.ratio - 1L).with_bits(64) <= row.ratio_err * 4L + ctx.tol();
      Real eps = 1L - base.q();
      lpts.emplace_back(eps, row.lhs.value);
      rpts.emplace_back(eps, row.rhs.value);
    } catch (const BudgetError& e) {
      tab.budget_exhausted = true;
      row.error = e.what();
    } catch (const Error& e) {
      row.error = e.what();
    }
    all_ok = all_ok && row.ok;
    tab.rows.push_back(std::move(row));
  }
  tab.ratios_ok = all_ok && !tab.rows.empty();

  tab.closed_form_mainlim2 = mainlim2_rhs(lp, ctx);
  const Real b = lp.b.with_bits(ctx.bits());
  Complex f = Complex(pow(Real(2L, ctx.bits()), b * 2L + 1L)) / gamma(Complex(b + 1L), ctx);
  tab.horn_value = scale(horn_closed_form(Complex(-b), Complex(b + 1L), lp.w, ctx), f);
  try {
    tab.via_H = mainlim2_lhs_via_H(lp, ctx);
  } catch (const BudgetError&) {
    tab.budget_exhausted = true;
  }
  try {
    tab.extrapolated_lhs = richardson_extrapolate(lpts, opts.order);
    tab.extrapolated_rhs = richardson_extrapolate(rpts, opts.order);
    tab.extrapolated = true;
    tab.constant_mainlim2 = tab.extrapolated_lhs.value / tab.closed_form_mainlim2.value;
    tab.constant_horn = tab.extrapolated_lhs.value / tab.horn_value.value;
  } catch (const InsufficientDataError& e) {
    tab.extrapolated = false;
    tab.extrapolation_error = e.what();
  }
  return tab;
}

}  // namespace qbil
