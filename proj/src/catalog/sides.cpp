// SPDX-License-Identifier: Apache-2.0
#include <string>

#include "qbil/catalog/check.hpp"
#include "qbil/limit/limit_lab.hpp"
#include "qbil/numeric/classical.hpp"
#include "qbil/qseries/psi.hpp"
#include "qbil/qseries/qpoch.hpp"
#include "qbil/qseries/theta.hpp"

namespace qbil {

namespace {

using Parts = std::vector<Estimate>;

Estimate operator*(const Estimate& a, const Estimate& b) { return mul(a, b); }
Estimate operator+(const Estimate& a, const Estimate& b) { return add(a, b); }
Estimate operator-(const Estimate& a, const Estimate& b) { return sub(a, b); }
Estimate operator*(const Estimate& a, const Complex& c) { return scale(a, c); }

// Shared evaluation state: base q, its square, and the working context.
struct Ev {
  const PrecisionContext& ctx;
  QBase base;
  QBase base2;
  Complex p, q;

  Ev(const QBase& b, const PrecisionContext& c)
      : ctx(c), base(b), base2(b.squared()), p(b.p().with_bits(c.bits())), q(b.q().with_bits(c.bits())) {}

  Estimate poch(const std::vector<Complex>& as) const { return qpoch_multi(as, base.q(), ctx); }
  Estimate poch2(const std::vector<Complex>& as) const { return qpoch_multi(as, base2.q(), ctx); }
  Estimate th(const Complex& z) const { return theta_series(z, base, ctx); }
  Estimate th2(const Complex& z) const { return theta_series(z, base2, ctx); }
  Estimate psi(const Complex& a, const Complex& b, const Complex& z) const {
    return psi_bilateral(PsiSpec{{a}, {b}}, base.q(), z, ctx);
  }
  Estimate exact(const Complex& v) const { return Estimate::exact(v); }
  Estimate half(const Estimate& e) const { return scale(e, Complex(Real(0.5, ctx.bits()))); }
};

Estimate quo(const Estimate& a, const Estimate& b, const char* what) { return div(a, b, what); }

template <class T>
const T& as(const IdentityParams& params, IdentityId id) {
  if (const T* p = std::get_if<T>(&params)) return *p;
  throw DomainError(std::string(tag(id)) + ": parameter record does not match the identity");
}

// The two 1psi1 branches of the main theorems with their Pochhammer prefactors.
struct Branches {
  Estimate s1, s2;
};

Branches main_branches(const ConstrainedParams& c, const Ev& e) {
  const Complex ab = c.alpha * c.beta;
  const Complex ga = c.gamma / c.alpha;
  const Complex inv_b = 1L / c.beta;
  const Complex bbg = c.beta * c.beta * c.gamma;
  Estimate s1 = quo(e.poch({ga}), e.poch({ab}), "(alpha beta; q)") * e.psi(ab, ga, c.z);
  Estimate s2 = quo(e.poch({bbg}), e.poch({inv_b}), "(1/beta; q)") * e.psi(inv_b, bbg, c.z);
  return {s1, s2};
}

Estimate odd_even(const Ev& e) { return quo(e.poch2({e.q}), e.poch2({e.q * e.q}), "(q^2; q^2)"); }

Estimate main_rhs(bool second, const ConstrainedParams& c, const Ev& e) {
  const Complex &al = c.alpha, &be = c.beta, &ga = c.gamma, &w = c.w, &p = e.p, &q = e.q;
  Estimate common = quo(e.poch2({ga / (al * al * be)}), e.poch2({al * al * be * be}), "(alpha^2 beta^2; q^2)");
  if (!second) {
    Estimate num = e.poch2({al * p * q / (ga * w), al * be * w * q / p});
    Estimate den = e.poch2({ga * w / (al * p), p / (al * be * w)});
    return common * quo(num, den, "(gamma w/(alpha q^1/2), q^1/2/(alpha beta w); q^2)");
  }
  const Complex q2 = q * q;
  Estimate num = e.poch2({al * p * q2 / (ga * w), al * be * w * q2 / p});
  Estimate den = e.poch2({ga * w * p / al, p * p * p / (al * be * w)});
  return common * quo(num, den, "(gamma w q^1/2/alpha, q^3/2/(alpha beta w); q^2)") * (al * be);
}

Parts main_side(IdentityId id, Side side, const ConstrainedParams& c, const Ev& e) {
  const bool second = id == IdentityId::MAIN2 || id == IdentityId::COR2;
  const bool cor = id == IdentityId::COR1 || id == IdentityId::COR2;
  if (side == Side::LHS) {
    Branches br = main_branches(c, e);
    Estimate sum = second ? br.s1 - br.s2 : br.s1 + br.s2;
    return {cor ? e.half(sum) : e.half(odd_even(e) * sum)};
  }
  Estimate r = main_rhs(second, c, e);
  if (cor) r = quo(r, odd_even(e), "(q; q^2)");
  return {r};
}

Parts phys_side(IdentityId id, Side side, const PhysicsParams& ph, const Ev& e) {
  const bool second = id == IdentityId::PHYS2;
  const Complex a = ph.a.with_bits(e.ctx.bits());
  const Complex ah = sqrt(a), aih = 1L / ah;
  const Complex &w = ph.w, &p = e.p, &q = e.q;
  if (side == Side::LHS) {
    const Complex z = p * aih * w;
    Estimate s1 = quo(e.poch({aih * q}), e.poch({ah}), "(a^1/2; q)") * e.psi(ah, aih * q, z);
    Estimate s2 = quo(e.poch({-(aih * q)}), e.poch({-ah}), "(-a^1/2; q)") * e.psi(-ah, -(aih * q), z);
    return {e.half(odd_even(e) * (second ? s1 - s2 : s1 + s2))};
  }
  const Complex pk = second ? p * p * p : p;
  Estimate num = e.poch2({q / a, ah * pk / w, ah * w * pk});
  Estimate den = e.poch2({a, aih * w * pk, aih * pk / w});
  Estimate r = quo(num, den, "(a, a^-1/2 w q^k, a^-1/2 q^k/w; q^2)");
  return {second ? r * ah : r};
}

// 1/(theta(X/w) theta(Xw)) against the symmetrized form, base q^2.
Parts co3_side(Side side, const Complex& X, const Complex& w, const Ev& e) {
  if (side == Side::LHS) return {quo(e.exact(e.ctx.one()), e.th2(X / w) * e.th2(X * w), "theta products")};
  Estimate s1 = e.th2(X / w) + e.th2(w / X);
  Estimate s2 = e.th2(X * w) + e.th2(1L / (X * w));
  return {quo(e.exact(e.ctx.complex(4)), s1 * s2, "symmetrized theta products")};
}

Parts co4_side(Side side, const Complex& X, const Complex& w, bool shifted, const Ev& e) {
  if (side == Side::LHS) {
    Estimate a = e.th2(X / w), b = e.th2(w / X), c = e.th2(X * w), d = e.th2(1L / (X * w));
    return {a * c, a * d, b * c, b * d};
  }
  Estimate same = e.th(X) * e.th(-w);
  Estimate cross = shifted ? e.th(w) * e.th(-X) : e.th(w) * e.th(-(1L / X));
  return {same, cross, cross, same};
}

struct Products {
  Estimate plus, minus, qq;
};

Products proof_products(const ConstrainedParams& c, const Ev& e) {
  const Complex &al = c.alpha, &be = c.beta, &ga = c.gamma, &w = c.w, &p = e.p, &q = e.q;
  const Complex p3 = p * p * p;
  Estimate pp = e.poch({be * ga * w / p, p3 / (be * ga * w), 1L / be, q * be});
  Estimate pm = e.poch({ga * w / (al * be * p), al * be * p3 / (ga * w), al * be, q / (al * be)});
  return {pp, pm, e.poch2({q, q})};
}

Parts proof_side(IdentityId id, Side side, const ConstrainedParams& c, const Ev& e) {
  const Complex &al = c.alpha, &be = c.beta, &ga = c.gamma, &w = c.w, &p = e.p, &q = e.q;
  const Complex q2 = q * q;
  const bool first = id == IdentityId::CO6 || id == IdentityId::CO7;
  // numerator-type product on the left and the denominator on the right
  Estimate upper = first ? e.poch2({al * p * q / (ga * w), al * be * w * q / p})
                         : e.poch2({al * p * q2 / (ga * w), al * be * w * q2 / p});
  if (side == Side::LHS) {
    switch (id) {
      case IdentityId::CO6: return {e.exact(e.ctx.one())};
      case IdentityId::CORO1: return {e.exact(al * be)};
      case IdentityId::CO7: return {upper};
      default: return {upper * (al * be)};
    }
  }
  Estimate lower = first ? e.poch2({ga * w * q / (al * p), p * q / (al * be * w)})
                         : e.poch2({ga * w / (al * p), p / (al * be * w)});
  Products pr = proof_products(c, e);
  Estimate comb = e.half(pr.qq * (first ? pr.plus + pr.minus : pr.plus - pr.minus));
  if (id == IdentityId::CO6 || id == IdentityId::CORO1) return {quo(comb, upper * lower, "q^2 products")};
  return {quo(comb, lower, "q^2 products")};
}

Parts constrained_side(IdentityId id, Side side, const ConstrainedParams& c, const Ev& e) {
  using I = IdentityId;
  const Complex X = c.alpha * c.beta / e.p;
  const Complex& w = c.w;
  switch (id) {
    case I::MAIN1:
    case I::MAIN2:
    case I::COR1:
    case I::COR2: return main_side(id, side, c, e);
    case I::CO3: return co3_side(side, X, w, e);
    case I::CORL3: return co3_side(side, X * e.q, w, e);
    case I::CO4: return co4_side(side, X, w, false, e);
    case I::CORL4: return co4_side(side, X * e.q, w, true, e);
    case I::CO5: {
      if (side == Side::LHS) return {quo(e.exact(e.ctx.one()), e.th2(X / w) * e.th2(X * w), "theta products")};
      Estimate s = e.th(X) * e.th(w / (c.alpha * c.beta * c.beta)) + e.th(w) * e.th(1L / (c.beta * e.p));
      return {quo(e.exact(e.ctx.complex(2)), s, "theta sum")};
    }
    case I::COROL1: {
      const Complex Xq = X * e.q;
      if (side == Side::LHS) return {quo(e.exact(e.ctx.one()), e.th2(Xq / w) * e.th2(Xq * w), "theta products")};
      Estimate s = e.th(w) * e.th(1L / (c.beta * e.p)) - e.th(X) * e.th(w / (c.alpha * c.beta * c.beta));
      return {quo(e.exact(c.alpha * c.beta * 2L), s, "theta difference")};
    }
    default: return proof_side(id, side, c, e);
  }
}

bool near_unit(const Complex& z) {
  Real d = abs(abs(z).with_bits(64) - 1L);
  return d <= Real(1e-20, 64);
}

}  // namespace

DomainResult domain_check(IdentityId id, const IdentityParams& params) {
  using I = IdentityId;
  auto fail = [](std::string r) { return DomainResult{false, std::move(r)}; };
  const auto kind = info(id).kind;
  return std::visit(
      [&](const auto& p) -> DomainResult {
        using T = std::decay_t<decltype(p)>;
        const bool match = (std::is_same_v<T, ConstrainedParams> && kind == ParamKind::Constrained) ||
                           (std::is_same_v<T, PhysicsParams> && kind == ParamKind::Physics) ||
                           (std::is_same_v<T, RamanujanParams> && kind == ParamKind::Ramanujan) ||
                           (std::is_same_v<T, QBinomParams> && kind == ParamKind::QBinom) ||
                           (std::is_same_v<T, ThetaParams> && kind == ParamKind::Theta) ||
                           (std::is_same_v<T, PairParams> && kind == ParamKind::Pair) ||
                           (std::is_same_v<T, HornParams> && kind == ParamKind::Horn) ||
                           (std::is_same_v<T, DougallParams> && kind == ParamKind::Dougall) ||
                           (std::is_same_v<T, LimitMainParams> && kind == ParamKind::LimitMain);
        if (!match) return fail("parameter record does not match the identity");
        if constexpr (std::is_same_v<T, ConstrainedParams>) {
          if (p.beta.is_zero()) return fail("beta must be nonzero");
          if (p.w.is_zero()) return fail("w must be nonzero");
          if (id == I::MAIN1 || id == I::MAIN2 || id == I::COR1 || id == I::COR2) {
            Real pb = abs(p.beta) * p.base.p(), aw = abs(p.w);
            if (!(pb < aw)) return fail("requires |q^1/2 beta| < |w|");
            if (!(aw * pb < 1L)) return fail("requires |w| < 1/|q^1/2 beta|");
          }
        } else if constexpr (std::is_same_v<T, PhysicsParams>) {
          if (p.a.is_zero()) return fail("a must be nonzero");
          if (p.w.is_zero()) return fail("w must be nonzero");
          Real mid = abs(p.w) * p.base.p() / abs(sqrt(p.a));
          if (!(p.base.q() / abs(p.a) < mid)) return fail("requires |q/a| < |q^1/2 w/a^1/2|");
          if (!(mid < 1L)) return fail("requires |q^1/2 w/a^1/2| < 1");
        } else if constexpr (std::is_same_v<T, RamanujanParams>) {
          if (p.a.is_zero()) return fail("a must be nonzero");
          Real az = abs(p.z);
          if (!(abs(p.b) / abs(p.a) < az)) return fail("requires |b/a| < |z|");
          if (!(az < 1L)) return fail("requires |z| < 1");
        } else if constexpr (std::is_same_v<T, QBinomParams>) {
          if (!(abs(p.z) < 1L)) return fail("requires |z| < 1");
        } else if constexpr (std::is_same_v<T, ThetaParams>) {
          if (p.z.is_zero()) return fail("z must be nonzero");
        } else if constexpr (std::is_same_v<T, PairParams>) {
          if (p.xi.is_zero() || p.eta.is_zero()) return fail("xi and eta must be nonzero");
        } else if constexpr (std::is_same_v<T, HornParams>) {
          if (!near_unit(p.z)) return fail("requires |z| = 1");
          if ((p.z - 1L).is_zero()) return fail("requires z != 1");
          if (!((p.c - p.a).re > 1L)) return fail("requires Re(c - a) > 1");
        } else if constexpr (std::is_same_v<T, DougallParams>) {
          if (!((p.c + p.d - p.a - p.b).re > 1L)) return fail("requires Re(c + d - a - b) > 1");
        } else if constexpr (std::is_same_v<T, LimitMainParams>) {
          if (!(p.b > 0L)) return fail("requires b > 0");
          if (!near_unit(p.w)) return fail("requires |w| = 1");
          if ((p.w - 1L).is_zero()) return fail("requires w != 1");
        }
        return {};
      },
      params);
}

std::vector<Estimate> eval_side(IdentityId id, Side side, const IdentityParams& params,
                                const PrecisionContext& ctx) {
  using I = IdentityId;
  const bool lhs = side == Side::LHS;
  switch (info(id).kind) {
    case ParamKind::Constrained: {
      const auto& c = as<ConstrainedParams>(params, id);
      return constrained_side(id, side, c, Ev(c.base, ctx));
    }
    case ParamKind::Physics: {
      const auto& ph = as<PhysicsParams>(params, id);
      return phys_side(id, side, ph, Ev(ph.base, ctx));
    }
    case ParamKind::Ramanujan: {
      const auto& r = as<RamanujanParams>(params, id);
      Ev e(r.base, ctx);
      if (lhs) return {e.psi(r.a, r.b, r.z)};
      return {ramanujan_rhs(r.a, r.b, r.base.q(), r.z, ctx)};
    }
    case ParamKind::QBinom: {
      const auto& r = as<QBinomParams>(params, id);
      Ev e(r.base, ctx);
      if (lhs) return {e.psi(r.a, e.q, r.z)};
      return {quo(e.poch({r.a * r.z}), e.poch({r.z}), "(z; q)")};
    }
    case ParamKind::Theta: {
      const auto& t = as<ThetaParams>(params, id);
      Ev e(t.base, ctx);
      if (id == I::JTP) return {lhs ? e.th(t.z) : theta_product(t.z, t.base, ctx)};
      if (id == I::THETA_INV) return {lhs ? e.th(t.z) : e.th(1L / t.z)};
      Parts out;
      for (long k : t.ks)
        out.push_back(lhs ? e.th(t.z * Complex(pow(e.base.q().with_bits(ctx.bits()), k)))
                          : theta_shift(t.z, k, t.base, ctx));
      return out;
    }
    case ParamKind::Pair: {
      const auto& pr = as<PairParams>(params, id);
      Ev e(pr.base, ctx);
      const Complex prod = pr.xi * pr.eta, ratio = pr.xi / pr.eta;
      if (id == I::P1) {
        if (lhs) return {e.th2(ratio) * e.th2(prod)};
        return {e.th(pr.xi) * e.th(-pr.eta)};
      }
      if (lhs) return {e.th2(prod), e.th2(ratio)};
      return {e.half(e.th2(prod) + e.th2(1L / prod)), e.half(e.th2(ratio) + e.th2(1L / ratio))};
    }
    case ParamKind::Horn: {
      const auto& h = as<HornParams>(params, id);
      if (lhs) return {eval_1H1(h.a, h.c, h.z, ctx, kClassicalMaxTerms, h.target)};
      return {horn_closed_form(h.a, h.c, h.z, ctx)};
    }
    case ParamKind::Dougall: {
      const auto& d = as<DougallParams>(params, id);
      if (lhs) return {eval_2H2(d.a, d.b, d.c, d.d, ctx.one(), ctx, kClassicalMaxTerms, d.target)};
      return {dougall_closed_form(d.a, d.b, d.c, d.d, ctx)};
    }
    case ParamKind::LimitMain: {
      const auto& l = as<LimitMainParams>(params, id);
      LimitParams lp = LimitParams::make(l.b, l.w, ctx);
      if (lhs) return {mainlim2_lhs_via_H(lp, ctx, kClassicalMaxTerms, l.target)};
      return {mainlim2_rhs(lp, ctx)};
    }
  }
  throw DomainError("unknown identity");
}

}  // namespace qbil
