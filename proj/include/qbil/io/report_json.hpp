// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <ostream>

#include <json.hpp>

#include "qbil/catalog/check.hpp"
#include "qbil/catalog/scan.hpp"
#include "qbil/formal/formal_check.hpp"
#include "qbil/limit/limit_lab.hpp"

namespace qbil {

using json = nlohmann::ordered_json;

/// Significant digits for values; bounds use 6.
inline constexpr int kValueDigits = 30;

json to_json(const Complex& z, int digits = kValueDigits);
json to_json(const Estimate& e, int digits = kValueDigits);
json to_json(const IdentityReport& r);
json to_json(const ScanResult& r, const ScanConfig& cfg);
json to_json(const FormalResult& r, const RationalParams& rp);
json to_json(const LimitTable& t);

/// Columns k, q, lhs_re, lhs_im, rhs_re, rhs_im, ratio_re, ratio_im, lhs_err, rhs_err.
void write_csv(const LimitTable& t, std::ostream& out);

}  // namespace qbil
