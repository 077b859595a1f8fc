// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "qbil/numeric/real.hpp"

namespace qbil {

/// Truncated Laurent series in p with rational coefficients, known modulo p^{order+1}.
/// coeffs[i] multiplies p^{val+i}; the identically-zero series has no coefficients and val = order+1.
struct LaurentSeries {
  long val = 0;
  long order = 0;
  std::vector<mpq_class> coeffs;

  /// c p^k known mod p^{order+1}
  static LaurentSeries monomial(const mpq_class& c, long k, long order);
  static LaurentSeries constant(const mpq_class& c, long order) { return monomial(c, 0, order); }

  bool is_zero() const { return coeffs.empty(); }
  /// Coefficient of p^k (zero outside the stored range; k must not exceed order).
  mpq_class coeff(long k) const;
  /// Drops leading zeros and anything beyond order.
  void normalize();
  std::string str(long max_terms = 8) const;
};

LaurentSeries ls_neg(const LaurentSeries& x);
LaurentSeries ls_add(const LaurentSeries& x, const LaurentSeries& y);
LaurentSeries ls_sub(const LaurentSeries& x, const LaurentSeries& y);
LaurentSeries ls_mul(const LaurentSeries& x, const LaurentSeries& y);
LaurentSeries ls_scale(const LaurentSeries& x, const mpq_class& c);
/// x * p^k
LaurentSeries ls_shift(const LaurentSeries& x, long k);
/// NotInvertibleError when x is zero to its order.
LaurentSeries ls_inv(const LaurentSeries& x);
LaurentSeries ls_div(const LaurentSeries& x, const LaurentSeries& y);
/// Exact value of the stored truncation at p, rounded to `bits`.
Real ls_eval(const LaurentSeries& x, const mpq_class& p, mpfr_prec_t bits);

}  // namespace qbil
