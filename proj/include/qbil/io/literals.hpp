// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>

#include <string_view>
#include <vector>

#include "qbil/numeric/complex.hpp"

namespace qbil {

/// "1.5", "-3/7", "2e-3"
Real parse_real(std::string_view text, mpfr_prec_t bits);

/// "re", "re+imi", "re-imi", "imi", "i", "-i"; components decimal or n/d.
Complex parse_complex(std::string_view text, mpfr_prec_t bits);

/// Exact rational from "n/d", an integer or a finite decimal.
mpq_class parse_rational(std::string_view text);

/// "0.3,0.5,0.7"
std::vector<double> parse_double_list(std::string_view text);

/// "3..10" or "7"
std::pair<long, long> parse_range(std::string_view text);

}  // namespace qbil
