// SPDX-License-Identifier: Apache-2.0
#include "qbil/formal/qseries.hpp"

#include <algorithm>

#include "qbil/errors.hpp"

namespace qbil {

namespace {

LaurentSeries one(long order) { return LaurentSeries::constant(1, order); }

// 1 - x
LaurentSeries one_minus(const LaurentSeries& x) { return ls_sub(one(x.order), x); }

}  // namespace

LaurentSeries ls_qpow(int base_power, long k, long order) {
  return LaurentSeries::monomial(1, 2L * base_power * k, order);
}

LaurentSeries ls_qpoch_inf(const LaurentSeries& a, int base_power, long order) {
  if (base_power != 1 && base_power != 2) throw PrecisionContractError("base power must be 1 or 2");
  LaurentSeries r = one(order);
  if (a.is_zero()) {
    r.order = std::min(order, a.order);
    return r;
  }
  if (a.val < 0) throw PrecisionContractError("(a; q) needs a of non-negative valuation");
  const long step = 2L * base_power;
  for (long k = 0; a.val + step * k <= order; ++k) r = ls_mul(r, one_minus(ls_shift(a, step * k)));
  r.order = std::min(r.order, order);
  r.normalize();
  return r;
}

LaurentSeries ls_theta(const LaurentSeries& z, int base_power, long order) {
  if (z.is_zero()) throw NotInvertibleError("theta argument is zero to its order");
  const long bp = base_power;
  const long v = z.val;
  auto val_of = [&](long n) { return bp * n * n + n * v; };
  LaurentSeries sum = one(order);
  for (int dir : {1, -1}) {
    LaurentSeries step = dir > 0 ? ls_neg(z) : ls_neg(ls_inv(z));
    LaurentSeries cur = one(order + std::abs(v) * (order + 2));  // (-z)^{dir n}
    for (long n = 1;; ++n) {
      long m = dir * n;
      cur = ls_mul(cur, step);
      if (val_of(m) > order) {
        // past the vertex every later term is higher still
        if (2 * bp * m * dir + v * dir > 0) break;
        continue;
      }
      sum = ls_add(sum, ls_shift(cur, bp * m * m));
    }
  }
  return sum;
}

LaurentSeries ls_psi11(const LaurentSeries& a, const LaurentSeries& b, const LaurentSeries& z, long order) {
  if (z.is_zero() || a.is_zero() || b.is_zero()) throw PrecisionContractError("psi parameters must be nonzero");
  if (z.val < 1) throw PrecisionContractError("psi needs val(z) >= 1");
  const LaurentSeries neg_ratio = ls_div(b, ls_mul(a, z));
  if (neg_ratio.val < 1) throw PrecisionContractError("psi needs val(b/(az)) >= 1");

  LaurentSeries sum = one(order);
  auto run = [&](const LaurentSeries& num, const LaurentSeries& den, const LaurentSeries& x) {
    LaurentSeries t = one(order);
    for (long n = 1;; ++n) {
      LaurentSeries f = one_minus(ls_shift(num, 2 * (n - 1)));
      if (f.is_zero()) break;  // (num; q)_n terminates
      t = ls_mul(ls_mul(t, f), ls_mul(ls_inv(one_minus(ls_shift(den, 2 * (n - 1)))), x));
      if (t.is_zero()) break;
      bool monotone = num.val + 2 * (n - 1) > 0 && den.val + 2 * (n - 1) > 0;
      if (t.val > order) {
        if (monotone) break;
        continue;
      }
      sum = ls_add(sum, t);
    }
  };
  const LaurentSeries q = ls_qpow(1, 1, order + 8);
  run(a, b, z);
  run(ls_div(q, b), ls_div(q, a), neg_ratio);
  return sum;
}

}  // namespace qbil
