// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "qbil/numeric/precision.hpp"
#include "qbil/qseries/qbase.hpp"

namespace qbil {

/// theta_q(z) = sum over n of q^{n^2/2} (-z)^n, truncated by the Gaussian tail bound.
Estimate theta_series(const Complex& z, const QBase& base, const PrecisionContext& ctx);

/// (q, q^{1/2} z, q^{1/2}/z; q)_infinity
Estimate theta_product(const Complex& z, const QBase& base, const PrecisionContext& ctx);

/// (-z)^{-k} q^{-k^2/2} theta_q(z), the value theta_q(z q^k) should take.
Estimate theta_shift(const Complex& z, long k, const QBase& base, const PrecisionContext& ctx);

}  // namespace qbil
