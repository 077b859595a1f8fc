// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qbil/catalog/check.hpp"
#include "qbil/catalog/params.hpp"
#include "qbil/qseries/psi.hpp"

namespace qbil {

/// b > 0 and |w| = 1, w != 1.
struct LimitParams {
  Real b;
  Complex w;

  static LimitParams make(const Real& b, const Complex& w, const PrecisionContext& ctx);
};

/// beta = -q^b, so alpha = -q^{-2b} and gamma = -q^{1-b}.
ConstrainedParams signed_params(const Real& b, const Complex& w, const QBase& base, const PrecisionContext& ctx);

/// W = (1 - q^2)^{2b+1}
Real weight(const Real& b, const Real& q);

/// W times the COR1/COR2 side under signed_params. Poles at integer b.
Estimate weighted_side(Side side, IdentityId id, const LimitParams& lp, const QBase& base, const PrecisionContext& ctx,
                       const PsiOptions& opts = {});

/// weighted_side divided by Gamma_q(-b), with the pole factors cancelled in closed form so integer b is regular.
Estimate normalized_side(Side side, IdentityId id, const LimitParams& lp, const QBase& base,
                         const PrecisionContext& ctx, const PsiOptions& opts = {});

/// q_k = 1 - 2^-k for k = k_min..k_max.
std::vector<QBase> q_sequence(long k_min, long k_max, const PrecisionContext& ctx);

/// Neville extrapolation to eps = 0 of a polynomial of the given order in eps; err = last correction.
Estimate richardson_extrapolate(const std::vector<std::pair<Real, Complex>>& points, long order);

/// Gamma(1/2)/Gamma(b + 1/2) (-w)^{-b} (1 - w)^{2b}
Estimate mainlim2_rhs(const LimitParams& lp, const PrecisionContext& ctx);

/// 2^{2b+1}/Gamma(b+1) 1H1(-b; b+1; w)
Estimate mainlim2_lhs_via_H(const LimitParams& lp, const PrecisionContext& ctx, long max_terms = 100000,
                            double target = 1e-12);

struct LimitRow {
  long k = 0;
  Real q{64};
  Estimate lhs, rhs;
  Complex ratio;
  Real ratio_err{64};  // |ratio - 1| allowed by the two bounds
  bool ok = false;
  std::string error;
};

struct LimitOptions {
  IdentityId identity = IdentityId::COR1;
  long order = 3;             // Richardson order
  long max_terms = 200000;    // per series
  double series_target = 0;   // 0 = ctx.tol()
};

struct LimitTable {
  LimitParams params;
  IdentityId identity;
  std::vector<LimitRow> rows;
  Estimate extrapolated_lhs, extrapolated_rhs;
  Estimate closed_form_mainlim2;  // printed right-hand side
  Estimate via_H;                 // printed left-hand side through 1H1
  Estimate horn_value;            // printed left-hand side through Horn's closed form
  Complex constant_mainlim2;      // extrapolated_lhs / closed_form_mainlim2
  Complex constant_horn;          // extrapolated_lhs / horn-based value
  bool ratios_ok = false;
  bool budget_exhausted = false;
  bool extrapolated = false;
  std::string extrapolation_error;
};

LimitTable limit_report(const LimitParams& lp, long k_min, long k_max, const PrecisionContext& ctx,
                        const LimitOptions& opts = {});

}  // namespace qbil
