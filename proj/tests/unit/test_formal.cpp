// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qbil/catalog/check.hpp"
#include "qbil/formal/formal_check.hpp"
#include "qbil/formal/qseries.hpp"
#include "support.hpp"

using namespace qbil;
using I = IdentityId;
using LS = LaurentSeries;

namespace {

LS poly(std::initializer_list<long> cs, long order) {
  LS r;
  r.val = 0;
  r.order = order;
  for (long c : cs) r.coeffs.emplace_back(c);
  r.normalize();
  return r;
}

}  // namespace

TEST_CASE("laurent arithmetic") {
  LS a = poly({1, 1}, 2), b = poly({1, -1}, 2);
  LS m = ls_mul(a, b);
  CHECK(m.coeff(0) == 1);
  CHECK(m.coeff(1) == 0);
  CHECK(m.coeff(2) == -1);
  CHECK(m.order == 2);

  LS inv = ls_inv(poly({1, -1}, 3));
  for (long k = 0; k <= 3; ++k) CHECK(inv.coeff(k) == 1);

  LS pinv = ls_inv(LS::monomial(1, 1, 5));
  CHECK(pinv.val == -1);
  CHECK(pinv.order == 5 - 2);
  LS one = ls_mul(pinv, LS::monomial(1, 1, 5));
  CHECK(one.coeff(0) == 1);

  CHECK_THROWS_AS(ls_inv(LS::constant(0, 4)), NotInvertibleError);
  CHECK(LS::constant(0, 4).is_zero());
  CHECK(LS::constant(0, 4).val == 5);
}

TEST_CASE("order bookkeeping") {
  // x known mod p^6 with val 1, y mod p^4 with val 0
  LS x = LS::monomial(mpq_class(2, 3), 1, 5), y = poly({3, 1}, 3);
  CHECK(ls_mul(x, y).order == std::min(5L + 0, 3L + 1));
  CHECK(ls_add(x, y).order == 3);
  CHECK(ls_shift(y, 2).order == 5);
  LS d = ls_div(y, ls_add(LS::constant(1, 6), x));
  CHECK(d.order == 3);
}

TEST_CASE("inverse of inverse and associativity") {
  LS x = poly({2, -1, 3, 5, 0, 7}, 5);
  LS back = ls_inv(ls_inv(x));
  for (long k = 0; k <= 5; ++k) CHECK(back.coeff(k) == x.coeff(k));
  LS y = poly({1, 4, -2}, 5), z = LS::monomial(mpq_class(1, 7), 1, 5);
  LS l = ls_mul(ls_mul(x, y), z), r = ls_mul(x, ls_mul(y, z));
  CHECK(ls_sub(l, r).is_zero());
}

TEST_CASE("q-pochhammer expansions") {
  // (p; q) = (1 - p)(1 - p^3)... and (q; q) = 1 - q - q^2 + q^5 + ...
  LS pp = ls_qpoch_inf(LS::monomial(1, 1, 4), 1, 4);
  CHECK(pp.coeff(0) == 1);
  CHECK(pp.coeff(1) == -1);
  CHECK(pp.coeff(2) == 0);
  CHECK(pp.coeff(3) == -1);
  CHECK(pp.coeff(4) == 1);
  LS qq = ls_qpoch_inf(LS::monomial(1, 2, 12), 1, 12);
  long euler[] = {1, 0, -1, 0, -1, 0, 0, 0, 0, 0, 1, 0, 0};
  for (long k = 0; k <= 12; ++k) CHECK(qq.coeff(k) == euler[k]);
  CHECK_THROWS_AS(ls_qpoch_inf(LS::monomial(1, -1, 4), 1, 4), PrecisionContractError);
}

TEST_CASE("formal theta identities") {
  RationalParams rp;
  for (I id : {I::JTP, I::THETA_INV, I::THETA_QDIFF}) {
    FormalResult r = formal_check(id, rp, 30);
    CHECK(r.pass);
    CHECK(r.working_order >= 30);
  }
}

TEST_CASE("q-binomial theorem formally") {
  // 1psi1(a; q; z) = (az; q)/(z; q)
  long N = 20;
  LS a = LS::constant(mpq_class(3, 4), N), z = LS::monomial(mpq_class(-2, 5), 1, N);
  LS lhs = ls_psi11(a, LS::monomial(1, 2, N), z, N);
  LS rhs = ls_div(ls_qpoch_inf(ls_mul(a, z), 1, N), ls_qpoch_inf(z, 1, N));
  CHECK(ls_sub(lhs, rhs).is_zero());
}

TEST_CASE("main theorems at rational points") {
  for (auto [b, w] : {std::pair{mpq_class(2, 3), mpq_class(1, 5)}, std::pair{mpq_class(-3, 2), mpq_class(7, 4)},
                      std::pair{mpq_class(1, 7), mpq_class(-5, 3)}}) {
    RationalParams rp;
    rp.beta = b;
    rp.w = w;
    for (I id : {I::MAIN1, I::MAIN2}) {
      FormalResult r = formal_check(id, rp, 50);
      INFO(tag(id), " beta ", b.get_str(), " w ", w.get_str());
      CHECK(r.pass);
    }
  }
}

TEST_CASE("printed parity statement fails at p^1") {
  // LHS has no p^1 term; RHS contributes -(xi + 1/xi) + (eta + 1/eta) = 91/30 at (2/3, 1/5)
  FormalResult r = formal_check(I::P1, RationalParams{}, 10);
  CHECK_FALSE(r.pass);
  CHECK(r.first_failing == 1);
  CHECK(r.coefficient == "-91/30");
}

TEST_CASE("passing to order N implies passing to every smaller order") {
  RationalParams rp;
  for (long n : {0L, 3L, 17L, 40L}) CHECK(formal_check(I::CO6, rp, n).pass);
}

TEST_CASE("identities without a formal form") {
  CHECK_THROWS_AS(formal_check(I::HORN, RationalParams{}, 10), DomainError);
  CHECK_THROWS_AS(formal_check(I::LIMIT_MAIN, RationalParams{}, 10), DomainError);
}

TEST_CASE("formal and numeric sides agree at p = 3/10") {
  RationalParams rp;
  rp.beta = mpq_class(1, 2);
  rp.w = mpq_class(-1, 3);
  PrecisionContext ctx(256);
  QBase base = QBase::from_p(Real::parse("3/10", 256));
  ConstrainedParams c = ConstrainedParams::make(base, Complex(Real::parse("1/2", 256)),
                                                Complex(Real::parse("-1/3", 256)), ctx);
  for (I id : {I::MAIN1, I::COR2}) {
    LS f = formal_side(id, true, rp, 60).front();
    Real fv = ls_eval(f, mpq_class(3, 10), 256);
    Complex nv = eval_side(id, Side::LHS, c, ctx).front().value;
    CHECK(abs(nv.im) < Real(1e-60, 64));
    CHECK(abs(nv.re - fv) < Real(1e-20, 64));
  }
  LS t = formal_side(I::JTP, true, RationalParams{}, 60).front();
  ThetaParams tp{base, Complex(Real::parse("2/3", 256))};
  Complex tv = eval_side(I::JTP, Side::LHS, tp, ctx).front().value;
  CHECK(abs(tv.re - ls_eval(t, mpq_class(3, 10), 256)) < Real(1e-20, 64));
}
