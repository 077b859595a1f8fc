// SPDX-License-Identifier: Apache-2.0
#include "qbil/formal/formal_check.hpp"

#include "qbil/errors.hpp"
#include "qbil/formal/qseries.hpp"

namespace qbil {

namespace {

using LS = LaurentSeries;
using Parts = std::vector<LS>;

LS operator+(const LS& x, const LS& y) { return ls_add(x, y); }
LS operator-(const LS& x, const LS& y) { return ls_sub(x, y); }
LS operator-(const LS& x) { return ls_neg(x); }
LS operator*(const LS& x, const LS& y) { return ls_mul(x, y); }
LS operator/(const LS& x, const LS& y) { return ls_div(x, y); }

struct F {
  long N;
  LS c(const mpq_class& v) const { return LS::constant(v, N); }
  LS p() const { return LS::monomial(1, 1, N); }
  LS q() const { return LS::monomial(1, 2, N); }
  LS half(const LS& x) const { return ls_scale(x, mpq_class(1, 2)); }
  LS poch(const LS& a) const { return ls_qpoch_inf(a, 1, N); }
  LS poch2(const LS& a) const { return ls_qpoch_inf(a, 2, N); }
  LS poch(std::initializer_list<LS> as) const {
    LS r = c(1);
    for (const LS& a : as) r = r * poch(a);
    return r;
  }
  LS poch2(std::initializer_list<LS> as) const {
    LS r = c(1);
    for (const LS& a : as) r = r * poch2(a);
    return r;
  }
  LS th(const LS& z) const { return ls_theta(z, 1, N); }
  LS th2(const LS& z) const { return ls_theta(z, 2, N); }
  LS psi(const LS& a, const LS& b, const LS& z) const { return ls_psi11(a, b, z, N); }
};

// alpha, beta, gamma, w as series, with alpha beta^2 = -1 and beta gamma = q.
struct Sym {
  LS al, be, ga, w, z, p, q;
};

Sym make_sym(const RationalParams& rp, const F& f) {
  if (rp.beta == 0 || rp.w == 0) throw DomainError("beta and w must be nonzero");
  Sym s;
  s.be = f.c(rp.beta);
  s.w = f.c(rp.w);
  s.p = f.p();
  s.q = f.q();
  s.al = f.c(-1 / (rp.beta * rp.beta));
  s.ga = s.q / s.be;
  s.z = s.ga * s.w / (s.al * s.p);
  return s;
}

Parts main_side(IdentityId id, bool lhs, const Sym& s, const F& f) {
  const bool second = id == IdentityId::MAIN2 || id == IdentityId::COR2;
  const bool cor = id == IdentityId::COR1 || id == IdentityId::COR2;
  const LS &al = s.al, &be = s.be, &ga = s.ga, &w = s.w, &p = s.p, &q = s.q;
  const LS odd_even = f.poch2(q) / f.poch2(q * q);
  if (lhs) {
    const LS ab = al * be, g_a = ga / al, ib = f.c(1) / be, bbg = be * be * ga;
    LS s1 = f.poch(g_a) / f.poch(ab) * f.psi(ab, g_a, s.z);
    LS s2 = f.poch(bbg) / f.poch(ib) * f.psi(ib, bbg, s.z);
    LS sum = second ? s1 - s2 : s1 + s2;
    return {cor ? f.half(sum) : f.half(odd_even * sum)};
  }
  LS common = f.poch2(ga / (al * al * be)) / f.poch2(al * al * be * be);
  LS r;
  if (!second) {
    r = common * f.poch2({al * p * q / (ga * w), al * be * w * q / p}) /
        f.poch2({ga * w / (al * p), p / (al * be * w)});
  } else {
    const LS q2 = q * q;
    r = al * be * common * f.poch2({al * p * q2 / (ga * w), al * be * w * q2 / p}) /
        f.poch2({ga * w * p / al, p * p * p / (al * be * w)});
  }
  return {cor ? r / odd_even : r};
}

Parts proof_side(IdentityId id, bool lhs, const Sym& s, const F& f) {
  const LS &al = s.al, &be = s.be, &ga = s.ga, &w = s.w, &p = s.p, &q = s.q;
  const LS q2 = q * q, p3 = p * p * p;
  const bool first = id == IdentityId::CO6 || id == IdentityId::CO7;
  LS upper = first ? f.poch2({al * p * q / (ga * w), al * be * w * q / p})
                   : f.poch2({al * p * q2 / (ga * w), al * be * w * q2 / p});
  if (lhs) {
    switch (id) {
      case IdentityId::CO6: return {f.c(1)};
      case IdentityId::CORO1: return {al * be};
      case IdentityId::CO7: return {upper};
      default: return {al * be * upper};
    }
  }
  LS lower = first ? f.poch2({ga * w * q / (al * p), p * q / (al * be * w)})
                   : f.poch2({ga * w / (al * p), p / (al * be * w)});
  LS pp = f.poch({be * ga * w / p, p3 / (be * ga * w), f.c(1) / be, q * be});
  LS pm = f.poch({ga * w / (al * be * p), al * be * p3 / (ga * w), al * be, q / (al * be)});
  LS comb = f.half(f.poch2({q, q}) * (first ? pp + pm : pp - pm));
  if (id == IdentityId::CO6 || id == IdentityId::CORO1) return {comb / (upper * lower)};
  return {comb / lower};
}

Parts side(IdentityId id, bool lhs, const RationalParams& rp, const F& f) {
  using I = IdentityId;
  switch (id) {
    case I::MAIN1:
    case I::MAIN2:
    case I::COR1:
    case I::COR2: return main_side(id, lhs, make_sym(rp, f), f);
    case I::CO6:
    case I::CO7:
    case I::CORO1:
    case I::CORO2: return proof_side(id, lhs, make_sym(rp, f), f);
    case I::CO5:
    case I::COROL1: {
      Sym s = make_sym(rp, f);
      const LS X = s.al * s.be / s.p;
      const LS one = f.c(1);
      const LS t1 = f.th(X) * f.th(s.w / (s.al * s.be * s.be));
      const LS t2 = f.th(s.w) * f.th(one / (s.be * s.p));
      if (id == I::CO5) {
        if (lhs) return {one / (f.th2(X / s.w) * f.th2(X * s.w))};
        return {f.c(2) / (t1 + t2)};
      }
      const LS Xq = X * s.q;
      if (lhs) return {one / (f.th2(Xq / s.w) * f.th2(Xq * s.w))};
      return {ls_scale(s.al * s.be, 2) / (t2 - t1)};
    }
    case I::P1: {
      if (rp.beta == 0 || rp.w == 0) throw DomainError("xi and eta must be nonzero");
      const LS xi = f.c(rp.beta), eta = f.c(rp.w);
      if (lhs) return {f.th2(xi / eta) * f.th2(xi * eta)};
      return {f.th(xi) * f.th(-eta)};
    }
    case I::RAMANUJAN: {
      Sym s = make_sym(rp, f);
      const LS a = s.al * s.be, b = s.ga / s.al, &z = s.z, &q = s.q;
      if (lhs) return {f.psi(a, b, z)};
      return {f.poch({q, b / a, a * z, q / (a * z)}) / f.poch({b, q / a, z, b / (a * z)})};
    }
    case I::QBINOM: {
      Sym s = make_sym(rp, f);
      const LS a = f.c(1) / s.be;
      if (lhs) return {f.psi(a, s.q, s.z)};
      return {f.poch(a * s.z) / f.poch(s.z)};
    }
    case I::JTP:
    case I::THETA_INV:
    case I::THETA_QDIFF: {
      if (rp.z == 0) throw DomainError("z must be nonzero");
      const LS z = f.c(rp.z), p = f.p(), q = f.q();
      if (id == I::JTP) return {lhs ? f.th(z) : f.poch({q, p * z, p / z})};
      if (id == I::THETA_INV) return {lhs ? f.th(z) : f.th(f.c(1) / z)};
      Parts out;
      const LS base = f.th(z);
      for (long k : rp.ks) {
        if (lhs) {
          out.push_back(f.th(ls_shift(z, 2 * k)));
        } else {
          mpq_class mz = -rp.z, pw = 1;
          for (long i = 0; i < std::abs(k); ++i) pw *= mz;
          if (k > 0) pw = 1 / pw;
          out.push_back(ls_shift(ls_scale(base, pw), -k * k));
        }
      }
      return out;
    }
    default: break;
  }
  throw DomainError(std::string(tag(id)) + " has no formal-series form");
}

}  // namespace

std::vector<LaurentSeries> formal_side(IdentityId id, bool lhs, const RationalParams& rp, long order) {
  return side(id, lhs, rp, F{order});
}

FormalResult formal_check(IdentityId id, const RationalParams& rp, long order) {
  if (!info(id).formal) throw DomainError(std::string(tag(id)) + " has no formal-series form");
  if (order < 0) throw DomainError("order must be non-negative");
  FormalResult res;
  res.id = id;
  res.order = order;
  for (long extra = 8; extra <= 1024; extra *= 2) {
    F f{order + extra};
    Parts l = side(id, true, rp, f), r = side(id, false, rp, f);
    std::vector<LS> diffs;
    bool reached = true;
    for (size_t i = 0; i < l.size(); ++i) {
      diffs.push_back(l[i] - r[i]);
      reached = reached && diffs.back().order >= order;
    }
    if (!reached) continue;
    res.working_order = f.N;
    res.parts = static_cast<long>(diffs.size());
    res.pass = true;
    for (size_t i = 0; i < diffs.size(); ++i) {
      const LS& d = diffs[i];
      if (d.is_zero() || d.val > order) continue;
      if (res.pass || d.val < res.first_failing) {
        res.pass = false;
        res.first_failing = d.val;
        res.coefficient = d.coeffs[0].get_str();
        res.failing_part = static_cast<long>(i);
      }
    }
    return res;
  }
  throw PrecisionContractError(std::string(tag(id)) + ": could not reach order " + std::to_string(order));
}

}  // namespace qbil
