// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "qbil/numeric/precision.hpp"

namespace qbil {

/// Gamma function by Spouge's approximation, relative accuracy ctx.tol().
/// PoleError at 0, -1, -2, ...
Complex gamma(const Complex& z, const PrecisionContext& ctx);

/// Spouge order used at a given precision (exposed for tests).
long spouge_order(mpfr_prec_t bits);

/// (alpha)_n for any integer n; the n < 0 case is 1/((alpha-1)...(alpha-|n|)).
Complex shifted_factorial(const Complex& alpha, long n, const PrecisionContext& ctx);

}  // namespace qbil
