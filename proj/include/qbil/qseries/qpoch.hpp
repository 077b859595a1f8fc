// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "qbil/numeric/precision.hpp"
#include "qbil/qseries/qbase.hpp"

namespace qbil {

/// (a; q)_n for any integer n. `q` is the base itself, so q^2 bases pass q*q.
Complex qpoch_finite(const Complex& a, const Real& q, long n, const PrecisionContext& ctx);

/// Factor budget for a single infinite product.
inline constexpr long kMaxFactors = 20000000;

/// (a; q)_infinity truncated by the log-tail bound; err is absolute, terms = factors used.
Estimate qpoch_inf(const Complex& a, const Real& q, const PrecisionContext& ctx);

/// (a_1, ..., a_k; q)_infinity
Estimate qpoch_multi(const std::vector<Complex>& as, const Real& q, const PrecisionContext& ctx);

/// (sign q^s; q)_infinity with the exponent kept exact, so (q^{-k}; q)_infinity is exactly 0.
Estimate qpoch_power(int sign, const Real& s, const Real& q, const PrecisionContext& ctx);

/// Gamma_q(z) = (q;q)/(q^z;q) (1-q)^{1-z}
Estimate q_gamma(const Complex& z, const QBase& base, const PrecisionContext& ctx);

}  // namespace qbil
