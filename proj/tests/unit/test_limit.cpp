// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <gmpxx.h>

#include "qbil/limit/limit_lab.hpp"
#include "qbil/numeric/classical.hpp"
#include "qbil/numeric/gamma.hpp"
#include "qbil/qseries/qpoch.hpp"
#include "support.hpp"

using namespace qbil;
using qt::cx;
using qt::dist;
using I = IdentityId;

TEST_CASE("limit parameters") {
  PrecisionContext ctx(256);
  CHECK_THROWS_AS(LimitParams::make(Real(0L, 256), cx(-1, 0), ctx), DomainError);
  CHECK_THROWS_AS(LimitParams::make(Real(-1L, 256), cx(-1, 0), ctx), DomainError);
  CHECK_THROWS_AS(LimitParams::make(Real(1L, 256), cx(1, 0), ctx), DomainError);
  CHECK_THROWS_AS(LimitParams::make(Real(1L, 256), cx(0.5, 0), ctx), DomainError);
  CHECK_NOTHROW(LimitParams::make(Real(1L, 256), expi(Real(2L, 256)), ctx));
}

TEST_CASE("signed parameters") {
  PrecisionContext ctx(256);
  QBase b = QBase::from_q(Real::parse("1/4", 256));
  ConstrainedParams c = signed_params(Real(1L, 256), cx(-1, 0), b, ctx);
  CHECK(dist(c.beta, cx(-0.25, 0)) < 1e-70);
  CHECK(dist(c.alpha * c.beta, cx(4, 0)) < 1e-70);
  CHECK(dist(c.gamma / c.alpha, cx(0.0625, 0)) < 1e-70);
  CHECK(dist(c.z, cx(-0.125, 0)) < 1e-70);
}

TEST_CASE("q sequence") {
  PrecisionContext ctx(128);
  auto qs = q_sequence(2, 5, ctx);
  REQUIRE(qs.size() == 4);
  CHECK(qs[0].q() == Real(0.75, 64));
  CHECK(qs[3].q() == Real(0.96875, 64));
  for (size_t i = 1; i < qs.size(); ++i) CHECK(qs[i].q() > qs[i - 1].q());
}

TEST_CASE("richardson on exact polynomials") {
  std::vector<std::pair<Real, Complex>> pts;
  for (long k = 2; k <= 6; ++k) {
    Real e = pow2(-k, 128);
    pts.emplace_back(e, Complex(3L + e * 2L - e * e * 5L));
  }
  Estimate r = richardson_extrapolate(pts, 2);
  CHECK(dist(r.value, Complex(3L, 128)) < 1e-35);
  std::vector<std::pair<Real, Complex>> flat{{Real(0.2, 128), Complex(7L, 128)}, {Real(0.1, 128), Complex(7L, 128)}};
  Estimate c = richardson_extrapolate(flat, 1);
  CHECK(c.value == Complex(7L, 128));
  CHECK(c.err.is_zero());
  CHECK_THROWS_AS(richardson_extrapolate(pts, 5), InsufficientDataError);
  CHECK_THROWS_AS(richardson_extrapolate(pts, 0), InsufficientDataError);
}

TEST_CASE("richardson accelerates the q-gamma limit") {
  // Gamma_q(1/2) -> sqrt(pi) as q -> 1
  PrecisionContext ctx(256);
  std::vector<std::pair<Real, Complex>> pts;
  for (const QBase& b : q_sequence(4, 12, ctx)) pts.emplace_back(1L - b.q(), q_gamma(cx(0.5, 0), b, ctx).value);
  Complex target(sqrt(pi(256)));
  double raw = dist(pts.back().second, target);
  Estimate r = richardson_extrapolate(pts, 3);
  CHECK(dist(r.value, target) < raw * 1e-4);
  CHECK(dist(r.value, target) < 1e-7);
}

TEST_CASE("closed forms at b = 1, w = -1") {
  PrecisionContext ctx(256);
  LimitParams lp = LimitParams::make(Real(1L, 256), cx(-1, 0), ctx);
  CHECK(dist(mainlim2_rhs(lp, ctx).value, cx(8, 0)) < 1e-60);
  Estimate h = mainlim2_lhs_via_H(lp, ctx);
  CHECK(dist(h.value, cx(16, 0)) < 1e-10);
}

TEST_CASE("closed form symmetries") {
  PrecisionContext ctx(256);
  Complex w = expi(Real(2.2, 256));
  for (double b : {0.5, 1.3}) {
    Complex v = mainlim2_rhs(LimitParams::make(Real(b, 256), w, ctx), ctx).value;
    Complex vc = mainlim2_rhs(LimitParams::make(Real(b, 256), conj(w), ctx), ctx).value;
    CHECK(v.is_finite());
    CHECK(dist(vc, conj(v)) < 1e-60);
  }
}

TEST_CASE("weight exponent bookkeeping") {
  // -(4a + 3b - c - 1)/2 = 3b + c once a = -2b and c = 1 - b
  for (mpq_class b : {mpq_class(1), mpq_class(1, 2), mpq_class(7, 3), mpq_class(-5, 11)}) {
    mpq_class a = -2 * b, c = 1 - b;
    mpq_class lhs = -(4 * a + 3 * b - c - 1) / 2;
    CHECK(lhs == 3 * b + c);
    CHECK(lhs == 2 * b + 1);
  }
}

TEST_CASE("1H1 route matches Horn's closed form") {
  // 2^{2b+1}/Gamma(b+1) times Horn at a = -b, c = b + 1
  PrecisionContext ctx(256);
  Real b(0.7, 256);
  Complex w = cx(0, 1);
  LimitParams lp = LimitParams::make(b, w, ctx);
  Estimate via = mainlim2_lhs_via_H(lp, ctx, 100000, 1e-10);
  Complex bc(b);
  Complex horn = horn_closed_form(-bc, bc + 1L, w, ctx).value;
  Complex ref = Complex(pow(Real(2L, 256), b * 2L + 1L)) / gamma(bc + 1L, ctx) * horn;
  CHECK(dist(via.value, ref) < 1e-8);
}

TEST_CASE("normalization divides out Gamma_q(-b)") {
  PrecisionContext ctx(256);
  QBase base = QBase::from_q(Real(0.7, 256));
  LimitParams lp = LimitParams::make(Real(0.5, 256), cx("3/5", "4/5"), ctx);
  Estimate g = q_gamma(cx(-0.5, 0), base, ctx);
  for (I id : {I::COR1, I::COR2})
    for (Side s : {Side::LHS, Side::RHS}) {
      Complex raw = weighted_side(s, id, lp, base, ctx).value;
      Complex norm = normalized_side(s, id, lp, base, ctx).value;
      CHECK(dist(raw, norm * g.value) < 1e-50 * std::max(1.0, abs(raw).to_double()));
    }
  CHECK_THROWS_AS(weighted_side(Side::LHS, I::MAIN1, lp, base, ctx), DomainError);
}

TEST_CASE("normalized sides agree at integer b") {
  PrecisionContext ctx(256);
  QBase base = QBase::from_q(Real(0.9, 256));
  LimitParams lp = LimitParams::make(Real(1L, 256), cx(-1, 0), ctx);
  Estimate l = normalized_side(Side::LHS, I::COR1, lp, base, ctx);
  Estimate r = normalized_side(Side::RHS, I::COR1, lp, base, ctx);
  CHECK(dist(div(l, r).value, ctx.one()) < 1e-60);
  QBase close = QBase::from_q(1L - pow2(-20, 256));
  CHECK_THROWS_AS(normalized_side(Side::LHS, I::COR1, lp, close, ctx), DomainError);
}

TEST_CASE("limit table") {
  PrecisionContext ctx(192);
  LimitParams lp = LimitParams::make(Real(1L, 192), cx(-1, 0), ctx);
  LimitTable t = limit_report(lp, 3, 7, ctx);
  CHECK(t.rows.size() == 5);
  CHECK(t.ratios_ok);
  CHECK(t.extrapolated);
  CHECK_FALSE(t.budget_exhausted);
  for (const LimitRow& r : t.rows) CHECK(dist(r.ratio, Complex(1L, 192)) < 1e-40);
  CHECK(dist(t.extrapolated_lhs.value, t.extrapolated_rhs.value) < 1e-6);
  CHECK(dist(t.constant_mainlim2, Complex(1L, 192)) < 1e-3);
}
