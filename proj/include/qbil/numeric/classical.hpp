// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "qbil/numeric/precision.hpp"

namespace qbil {

/// Default term budget for the classical bilateral sums.
inline constexpr long kClassicalMaxTerms = 100000;

/// 1H1(a; c; z) = sum over n in Z of (a)_n/(c)_n z^n, |z| = 1, z != 1, Re(c - a) > 1.
/// `target` is the error goal relative to max(1, |sum|); 0 means ctx.tol().
/// BudgetError when max_terms (both directions together) cannot reach it.
Estimate eval_1H1(const Complex& a, const Complex& c, const Complex& z, const PrecisionContext& ctx,
                  long max_terms = kClassicalMaxTerms, double target = 0.0);

/// 2H2(a, b; c, d; z) on |z| = 1 with Re(c + d - a - b) > 1.
Estimate eval_2H2(const Complex& a, const Complex& b, const Complex& c, const Complex& d, const Complex& z,
                  const PrecisionContext& ctx, long max_terms = kClassicalMaxTerms, double target = 0.0);

/// Bilateral binomial theorem: (1-z)^{c-a-1}/(-z)^{c-1} Gamma(1-a)Gamma(c)/Gamma(c-a).
Estimate horn_closed_form(const Complex& a, const Complex& c, const Complex& z, const PrecisionContext& ctx);

/// Gamma(1-a)Gamma(1-b)Gamma(c)Gamma(d)Gamma(c+d-a-b-1) / (Gamma(c-a)Gamma(c-b)Gamma(d-a)Gamma(d-b)).
Estimate dougall_closed_form(const Complex& a, const Complex& b, const Complex& c, const Complex& d,
                             const PrecisionContext& ctx);

}  // namespace qbil
