// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "qbil/formal/laurent.hpp"

namespace qbil {

/// q = p^2 as a series (base_power 1) or q^2 = p^4 (base_power 2).
LaurentSeries ls_qpow(int base_power, long k, long order);

/// (a; q^base_power)_infinity mod p^{order+1}; needs val(a) >= 0.
LaurentSeries ls_qpoch_inf(const LaurentSeries& a, int base_power, long order);

/// theta with base q^base_power: sum over n of p^{base_power n^2} (-z)^n.
LaurentSeries ls_theta(const LaurentSeries& z, int base_power, long order);

/// 1psi1(a; b; q, z) with q = p^2; needs val(z) >= 1 and val(b/(az)) >= 1.
LaurentSeries ls_psi11(const LaurentSeries& a, const LaurentSeries& b, const LaurentSeries& z, long order);

}  // namespace qbil
