// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "qbil/catalog/registry.hpp"
#include "qbil/formal/laurent.hpp"

namespace qbil {

/// Rational specialization. beta and w feed the constrained identities, z the theta ones.
struct RationalParams {
  mpq_class beta{2, 3};
  mpq_class w{1, 5};
  mpq_class z{2, 3};
  std::vector<long> ks{-2, -1, 1, 2};
};

struct FormalResult {
  IdentityId id;
  long order = 0;            // requested N
  long working_order = 0;    // order the sides were computed to
  bool pass = false;
  long first_failing = 0;    // meaningful when !pass
  std::string coefficient;   // exact value of that coefficient
  long parts = 1;
  long failing_part = 0;
};

/// One series per equation, computed to at least p^order.
std::vector<LaurentSeries> formal_side(IdentityId id, bool lhs, const RationalParams& rp, long order);

/// LHS - RHS coefficient by coefficient through p^order. DomainError for identities without a formal form,
/// PrecisionContractError if the requested order cannot be reached.
FormalResult formal_check(IdentityId id, const RationalParams& rp, long order);

}  // namespace qbil
