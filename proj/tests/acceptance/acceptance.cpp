// SPDX-License-Identifier: Apache-2.0
// One PASS/FAIL line per acceptance criterion. Exit status is the number of failing criteria.
#include <chrono>
#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "qbil/catalog/check.hpp"
#include "qbil/catalog/scan.hpp"
#include "qbil/formal/formal_check.hpp"
#include "qbil/limit/limit_lab.hpp"
#include "qbil/numeric/classical.hpp"
#include "qbil/qseries/psi.hpp"
#include "qbil/qseries/qpoch.hpp"
#include "qbil/qseries/theta.hpp"

using namespace qbil;
using I = IdentityId;
using Clock = std::chrono::steady_clock;

namespace {

const std::vector<double> kGrid{0.3, 0.5, 0.7};
int failures = 0;

double seconds(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

void report(int n, bool ok, const std::string& detail) {
  std::cout << "criterion " << n << ": " << (ok ? "PASS" : "FAIL") << "  " << detail << std::endl;
  if (!ok) ++failures;
}

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", v);
  return buf;
}

Complex polar(double r, double t, mpfr_prec_t bits) { return Complex(r * std::cos(t), r * std::sin(t), bits); }

void ramanujan_suite() {
  PrecisionContext ctx(256);
  std::mt19937_64 gen(20240917);
  std::uniform_real_distribution<double> U(0.0, 1.0);
  auto t0 = Clock::now();
  long ok = 0;
  double worst_bound = 0, worst_ratio = 0;
  for (int i = 0; i < 50; ++i) {
    double q = 0.1 + 0.8 * U(gen);
    Complex z = polar(0.2 + 0.65 * U(gen), 6.283 * U(gen), 256);
    Complex a = polar(0.5 + 2.5 * U(gen), 6.283 * U(gen), 256);
    // |b/a| stays below 0.8 |z|
    Complex b = a * z * polar(0.1 + 0.7 * U(gen), 6.283 * U(gen), 256);
    Real qr(q, 256);
    Estimate l = psi_bilateral({{a}, {b}}, qr, z, ctx);
    Estimate r = ramanujan_rhs(a, b, qr, z, ctx);
    Real diff = abs(l.value - r.value).with_bits(64);
    Real bound = l.err + r.err;
    bool pass = tolerance_policy(diff, l.err, r.err, abs(l.value), abs(r.value), ctx) && bound < Real(1e-40, 64);
    ok += pass;
    worst_bound = std::max(worst_bound, bound.to_double());
    if (!bound.is_zero()) worst_ratio = std::max(worst_ratio, (diff / bound).to_double());
  }
  double t = seconds(t0);
  report(1, ok == 50 && t < 30,
         std::to_string(ok) + "/50 within bounds, max bound " + sci(worst_bound) + ", max diff/bound " +
             sci(worst_ratio) + ", " + sci(t) + " s");
}

void main_numeric() {
  PrecisionContext lo(256), hi(512);
  long n = 0, ok = 0, shrink = 0;
  double worst = 0;
  for (I id : {I::MAIN1, I::MAIN2, I::COR1, I::COR2})
    for (long s = 0; s < 20; ++s)
      for (const auto& rec : sample_params(id, 42, s, kGrid, lo)) {
        ++n;
        IdentityReport a = check(id, rec, lo);
        IdentityReport b = check(id, at_precision(rec, hi), hi);
        ok += a.pass && a.rel_err < Real(1e-40, 64);
        shrink += b.pass && (b.abs_err < a.abs_err || a.abs_err.is_zero());
        worst = std::max(worst, a.rel_err.to_double());
      }
  report(2, ok == n && shrink == n,
         std::to_string(ok) + "/" + std::to_string(n) + " pass at 256 bits, max rel_err " + sci(worst) + "; " +
             std::to_string(shrink) + "/" + std::to_string(n) + " residuals shrink at 512 bits");
}

void main_formal() {
  auto t0 = Clock::now();
  long ok = 0, n = 0;
  for (auto [b, w] : {std::pair{mpq_class(2, 3), mpq_class(1, 5)}, std::pair{mpq_class(-3, 5), mpq_class(2, 7)},
                      std::pair{mpq_class(1, 2), mpq_class(-1, 3)}}) {
    RationalParams rp;
    rp.beta = b;
    rp.w = w;
    for (I id : {I::MAIN1, I::MAIN2}) {
      ++n;
      ok += formal_check(id, rp, 50).pass;
    }
  }
  double t = seconds(t0);
  report(3, ok == n && t < 60, std::to_string(ok) + "/" + std::to_string(n) + " exact through p^50, " + sci(t) + " s");
}

void theta_suite() {
  PrecisionContext ctx(256);
  std::string bad;
  double worst = 0;
  long n = 0, ok = 0;
  for (I id : {I::JTP, I::THETA_INV, I::THETA_QDIFF, I::P1, I::CO5, I::COROL1, I::CO6, I::CO7, I::CORO1, I::CORO2}) {
    long fails = 0;
    for (long s = 0; s < 20; ++s)
      for (const auto& rec : sample_params(id, 42, s, kGrid, ctx)) {
        ++n;
        IdentityReport r = check(id, rec, ctx);
        bool pass = r.pass && r.rel_err < Real(1e-40, 64);
        ok += pass;
        fails += !pass;
        if (pass) worst = std::max(worst, r.rel_err.to_double());
      }
    if (fails) bad += " " + std::string(tag(id)) + "(" + std::to_string(fails) + " numeric)";
  }
  long fok = 0;
  for (I id : {I::JTP, I::THETA_INV, I::THETA_QDIFF}) {
    bool pass = formal_check(id, RationalParams{}, 30).pass;
    fok += pass;
    if (!pass) bad += " " + std::string(tag(id)) + "(formal)";
  }
  report(4, ok == n && fok == 3,
         std::to_string(ok) + "/" + std::to_string(n) + " numeric, " + std::to_string(fok) +
             "/3 formal through p^30, max passing rel_err " + sci(worst) + (bad.empty() ? "" : "; failing:" + bad));
}

void spot_values() {
  PrecisionContext ctx(256);
  QBase half = QBase::from_q(Real(0.5, 256)), quarter = QBase::from_q(Real(0.25, 256));
  double qq = qpoch_inf(Complex(half.q()), half.q(), ctx).value.re.to_double();
  double th = theta_series(ctx.one(), quarter, ctx).value.re.to_double();
  Complex g = q_gamma(ctx.complex(3), half, ctx).value;
  Complex h = eval_1H1(ctx.complex(-1), ctx.complex(2), ctx.complex(-1), ctx).value;
  Real r64 = pow2(-250, 64);
  bool a = std::abs(qq - 0.288788) <= 1e-6, b = std::abs(th - 0.121124) <= 1e-5;
  bool c = abs(g - Complex(1.5, 0, 256)) < r64, d = abs(h - ctx.complex(2)) < r64;
  report(5, a && b && c && d,
         "(1/2;1/2) = " + std::to_string(qq) + ", theta_1/4(1) = " + std::to_string(th) + ", Gamma_0.5(3) - 1.5 = " +
             sci(abs(g - Complex(1.5, 0, 256)).to_double()) + ", 1H1(-1;2;-1) - 2 = " +
             sci(abs(h - ctx.complex(2)).to_double()));
}

void classical_suite() {
  PrecisionContext ctx(256);
  double worst = 0;
  long max_terms = 0;
  bool ok = true;
  for (auto [a, c] : {std::pair{-0.3, 1.6}, std::pair{-1.2, 3.4}})
    for (const Complex& w : {Complex(-1L, 256), Complex(0.0, 1.0, 256), expi(Real(2L, 256))}) {
      Complex ac(a, 0, 256), cc(c, 0, 256);
      Estimate s = eval_1H1(ac, cc, w, ctx, 100000, 1e-8);
      double d = abs(s.value - horn_closed_form(ac, cc, w, ctx).value).to_double();
      worst = std::max(worst, d);
      max_terms = std::max(max_terms, s.terms);
      ok = ok && d <= 1e-6 && s.terms <= 100000;
    }
  Estimate s = eval_2H2(Complex(0.1, 0, 256), Complex(0.2, 0, 256), Complex(1.5, 0, 256), Complex(1.7, 0, 256),
                        ctx.one(), ctx, 100000, 1e-8);
  Estimate dg =
      dougall_closed_form(Complex(0.1, 0, 256), Complex(0.2, 0, 256), Complex(1.5, 0, 256), Complex(1.7, 0, 256), ctx);
  double dd = abs(s.value - dg.value).to_double();
  Estimate fin = eval_2H2(ctx.complex(-1), ctx.complex(-1), ctx.complex(2), ctx.complex(2), ctx.one(), ctx);
  double df = abs(fin.value - Complex(1.5, 0, 256)).to_double();
  ok = ok && dd <= 1e-6 && df < 1e-70;
  report(6, ok,
         "1H1 vs Horn max diff " + sci(worst) + " with at most " + std::to_string(max_terms) +
             " terms, 2H2 vs Dougall " + sci(dd) + ", finite case - 3/2 = " + sci(df));
}

void limit_suite() {
  PrecisionContext ctx(256);
  LimitParams lp = LimitParams::make(Real(1L, 256), Complex(-1L, 256), ctx);
  LimitTable t = limit_report(lp, 3, 10, ctx);
  double worst = 0;
  for (const LimitRow& r : t.rows)
    worst = std::max(worst, r.error.empty() ? abs(r.ratio - 1L).to_double() : 1.0);
  bool rows = t.rows.size() == 8 && worst < 1e-20;
  double agree = t.extrapolated
                     ? (abs(t.extrapolated_lhs.value - t.extrapolated_rhs.value) / abs(t.extrapolated_rhs.value))
                           .to_double()
                     : 1.0;
  double constant = t.constant_mainlim2.re.to_double();
  bool const_ok = std::abs(constant - 2.0) <= 1e-2;
  report(7, rows && agree < 1e-2 && const_ok,
         "max |ratio - 1| " + sci(worst) + ", extrapolated LHS/RHS relative gap " + sci(agree) +
             ", constant (extrapolated LHS)/(mainlim2_rhs) = " + std::to_string(constant) + " (expected 2)");
}

void physics() {
  PrecisionContext ctx(256);
  double worst = 0;
  bool ok = true;
  for (long s = 0; s < 10; ++s)
    for (const auto& rec : sample_params(I::PHYS1, 42, s, kGrid, ctx)) {
      ConstrainedParams c = std::get<PhysicsParams>(rec).embed(ctx);
      for (auto [ph, mn] : {std::pair{I::PHYS1, I::MAIN1}, std::pair{I::PHYS2, I::MAIN2}})
        for (Side side : {Side::LHS, Side::RHS}) {
          Complex a = eval_side(ph, side, rec, ctx).front().value;
          Complex b = eval_side(mn, side, c, ctx).front().value;
          double d = (abs(a - b) / max(Real(1L, 64), abs(b))).to_double();
          worst = std::max(worst, d);
          ok = ok && d < 1e-40;
        }
    }
  report(8, ok, "max difference after substitution " + sci(worst) + " over 10 samples x 3 q");
}

std::string run_scan() {
  std::vector<std::string> args{"qbil", "scan", "--identity", "all", "--samples", "25", "--seed", "42",
                                "--deterministic"};
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return out.str();
}

void determinism() {
  std::string a = run_scan(), b = run_scan();
  report(9, !a.empty() && a == b, std::to_string(a.size()) + " bytes, runs " + (a == b ? "identical" : "differ"));
}

}  // namespace

int main() {
  ramanujan_suite();
  main_numeric();
  main_formal();
  theta_suite();
  spot_values();
  classical_suite();
  limit_suite();
  physics();
  determinism();
  std::cout << failures << " of 9 criteria failing" << std::endl;
  return failures;
}
