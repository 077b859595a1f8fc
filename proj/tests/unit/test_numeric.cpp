// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "qbil/numeric/classical.hpp"
#include "qbil/numeric/gamma.hpp"
#include "support.hpp"

using namespace qbil;
using qt::cx;
using qt::dist;

TEST_CASE("real parse and round trip") {
  Real r = Real::parse("3/7", 256);
  CHECK(abs(r * 7 - 3) < pow2(-250, 64));
  CHECK(Real::parse(r.str(), 256) == r);
  CHECK(Real::parse("-1e-3", 128).to_double() == doctest::Approx(-1e-3));
  CHECK_THROWS_AS(Real::parse("abc", 64), ParseError);
  CHECK_THROWS_AS(Real::parse("1/0", 64), ParseError);
}

TEST_CASE("mixed precision rounds to the wider operand") {
  Real a(1L, 64), b(3L, 512);
  CHECK((a / b).bits() == 512);
  CHECK((b / a).bits() == 512);
}

TEST_CASE("principal branches") {
  PrecisionContext ctx(128);
  Complex m1(-1L, 128);
  CHECK(abs(arg(m1) - pi(128)) < Real(1e-35, 64));
  Complex s = sqrt(m1);
  CHECK(dist(s, cx(0, 1, 128)) < 1e-35);
  // signed zero below the cut still counts as +0
  Complex mz(Real(-1L, 128), -Real(128));
  CHECK(arg(mz) > 0L);
  Complex l = log(cx(-2, 0, 128));
  CHECK(l.im == pi(128));
  CHECK(dist(exp(log(cx(0.3, -2.1, 128))), cx(0.3, -2.1, 128)) < 1e-35);
  CHECK(dist(powi(cx(0.5, 0.5, 128), -3), 1L / (cx(0.5, 0.5, 128) * cx(0.5, 0.5, 128) * cx(0.5, 0.5, 128))) < 1e-35);
  CHECK_THROWS_AS(cpow_principal(ctx.zero(), cx(-0.5, 0, 128), ctx), BranchPointError);
}

TEST_CASE("cpow matches std::pow for a non-integer exponent") {
  PrecisionContext ctx(128);
  Complex v = cpow_principal(cx(-0.7, 0.2, 128), cx(0.3, -1.1, 128), ctx);
  std::complex<double> ref = std::pow(std::complex<double>(-0.7, 0.2), std::complex<double>(0.3, -1.1));
  CHECK(std::abs(qt::to_std(v) - ref) < 1e-14);
}

TEST_CASE("precision context") {
  CHECK_THROWS_AS(PrecisionContext(32), DomainError);
  PrecisionContext ctx(256);
  CHECK(ctx.tol() == pow2(-240, 64));
  CHECK(ctx.doubled().bits() == 512);
}

TEST_CASE("estimate arithmetic keeps bounds") {
  Estimate a{cx(2, 0), Real(1e-10, 64), 3};
  Estimate b{cx(0, 3), Real(1e-12, 64), 5};
  Estimate m = mul(a, b);
  CHECK(dist(m.value, cx(0, 6)) < 1e-60);
  CHECK(m.err.to_double() >= 3e-10);
  CHECK(m.terms == 8);
  Estimate tiny{cx(1e-13, 0), Real(1e-12, 64), 1};
  CHECK_THROWS_AS(div(a, tiny), PoleError);
  Estimate d = div(a, b);
  CHECK(dist(d.value, cx(0, -2.0 / 3, 256)) < 1e-15);
}

TEST_CASE("gamma against independent values") {
  PrecisionContext ctx(256);
  Complex half = gamma(cx(0.5, 0), ctx);
  CHECK(dist(half, Complex(sqrt(pi(256)))) < 1e-70);
  CHECK(dist(gamma(ctx.complex(5), ctx), ctx.complex(24)) < 1e-68);
  // mpmath at 40 digits
  CHECK(dist(gamma(cx(-2.5, 1), ctx),
             cx("-0.04173662580789361374476013830978040374811", "-0.08636910736976348469418627934702821054094")) <
        1e-38);
  CHECK(dist(gamma(cx(0.3, -4), ctx),
             cx("0.001164643684811490564049681046385975308065", "-0.003352559888035202437358346583536235202091")) <
        1e-40);
  CHECK_THROWS_AS(gamma(ctx.complex(-2), ctx), PoleError);
  CHECK_THROWS_AS(gamma(ctx.zero(), ctx), PoleError);
}

TEST_CASE("gamma reflection at random points") {
  PrecisionContext ctx(192);
  for (double re : {-3.3, -0.4, 0.7, 2.9})
    for (double im : {-1.5, 0.25, 3.0}) {
      Complex z = cx(re, im, 192);
      Complex lhs = gamma(z, ctx) * gamma(1L - z, ctx);
      Complex rhs = Complex(pi(192)) / sin(Complex(pi(192)) * z);
      CHECK(qt::dist(lhs, rhs) / abs(rhs).to_double() < 1e-50);
    }
}

TEST_CASE("spouge order grows with precision") {
  CHECK(spouge_order(128) < spouge_order(256));
  CHECK(spouge_order(256) < spouge_order(1024));
}

TEST_CASE("shifted factorial both directions") {
  PrecisionContext ctx(128);
  Complex a = cx(0.3, 0.2, 128);
  Complex brute = a * (a + 1L) * (a + 2L);
  CHECK(dist(shifted_factorial(a, 3, ctx), brute) < 1e-35);
  Complex inv = 1L / ((a - 1L) * (a - 2L));
  CHECK(dist(shifted_factorial(a, -2, ctx), inv) < 1e-35);
  CHECK(dist(shifted_factorial(a, 0, ctx), ctx.one()) == 0.0);
}

TEST_CASE("terminating 1H1 equals the hand sum") {
  // n = -1, 0, 1 contribute 1/2, 1, 1/2; everything else vanishes
  PrecisionContext ctx(256);
  Estimate e = eval_1H1(ctx.complex(-1), ctx.complex(2), ctx.complex(-1), ctx);
  CHECK(dist(e.value, ctx.complex(2)) < 1e-60);
}

TEST_CASE("1H1 against the closed form") {
  PrecisionContext ctx(256);
  Real t(2L, 256);
  for (auto [a, c] : {std::pair{-0.3, 1.6}, std::pair{-1.2, 3.4}})
    for (const Complex& w : {cx(-1, 0), cx(0, 1), expi(t)}) {
      Estimate s = eval_1H1(cx(a, 0), cx(c, 0), w, ctx, 100000, 1e-8);
      Estimate h = horn_closed_form(cx(a, 0), cx(c, 0), w, ctx);
      CHECK(dist(s.value, h.value) < 1e-6);
      CHECK(s.terms <= 100000);
    }
}

TEST_CASE("1H1 domain") {
  PrecisionContext ctx(128);
  CHECK_THROWS_AS(eval_1H1(cx(0.5, 0, 128), cx(1.0, 0, 128), cx(-1, 0, 128), ctx), DomainError);
  CHECK_THROWS_AS(eval_1H1(cx(-1, 0, 128), cx(2, 0, 128), cx(1, 0, 128), ctx), DomainError);
}

TEST_CASE("2H2 against Dougall") {
  PrecisionContext ctx(256);
  Estimate s = eval_2H2(cx(0.1, 0), cx(0.2, 0), cx(1.5, 0), cx(1.7, 0), ctx.one(), ctx, 100000, 1e-8);
  Estimate d = dougall_closed_form(cx(0.1, 0), cx(0.2, 0), cx(1.5, 0), cx(1.7, 0), ctx);
  CHECK(dist(s.value, d.value) < 1e-6);
  Estimate t = eval_2H2(ctx.complex(-1), ctx.complex(-1), ctx.complex(2), ctx.complex(2), ctx.one(), ctx);
  CHECK(dist(t.value, cx(1.5, 0)) < 1e-60);
  Estimate u = dougall_closed_form(ctx.complex(-1), ctx.complex(-1), ctx.complex(2), ctx.complex(2), ctx);
  CHECK(dist(u.value, cx(1.5, 0)) < 1e-60);
}
