// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qbil/catalog/params.hpp"
#include "qbil/catalog/registry.hpp"

namespace qbil {

enum class Side { LHS, RHS };

/// pass/fail of a report; indeterminate = RHS pole, reported = evaluated but not asserted.
enum class Status { Pass, Fail, Indeterminate, Reported };
std::string_view status_name(Status s);

struct DomainResult {
  bool ok = true;
  std::string reason;
};

/// Region where both sides of the identity are defined.
DomainResult domain_check(IdentityId id, const IdentityParams& params);

/// One Estimate per equation of the identity (several for LEM1, CO4, CORL4, THETA_QDIFF).
std::vector<Estimate> eval_side(IdentityId id, Side side, const IdentityParams& params, const PrecisionContext& ctx);

/// abs_err <= 4 (lhs_bound + rhs_bound) + 2^-(bits - guard) max(|lhs|, |rhs|)
bool tolerance_policy(const Real& abs_err, const Real& lhs_bound, const Real& rhs_bound, const Real& lhs_abs,
                      const Real& rhs_abs, const PrecisionContext& ctx);

struct IdentityReport {
  IdentityId id;
  std::vector<std::pair<std::string, std::string>> params;
  Complex lhs, rhs;
  Real abs_err{64}, rel_err{64};
  Real lhs_bound{64}, rhs_bound{64};
  bool pass = false;
  Status status = Status::Fail;
  std::string notes;
  long lhs_terms = 0, rhs_terms = 0;
  long parts = 1;
  long bits = 0;
  long sample = -1;  // index within a scan
};

/// Evaluates both sides and applies the tolerance policy. DomainError when domain_check fails.
IdentityReport check(IdentityId id, const IdentityParams& params, const PrecisionContext& ctx);

}  // namespace qbil
