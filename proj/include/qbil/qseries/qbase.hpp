// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "qbil/errors.hpp"
#include "qbil/numeric/real.hpp"

namespace qbil {

/// The base q in (0, 1) together with p = q^{1/2}; half-integer powers of q are integer powers of p.
class QBase {
 public:
  static QBase from_q(const Real& q) {
    if (!(q > 0L) || !(q < 1L)) throw DomainError("q must lie in (0, 1)");
    return QBase(sqrt(q), q);
  }
  static QBase from_p(const Real& p) {
    if (!(p > 0L) || !(p < 1L)) throw DomainError("p must lie in (0, 1)");
    return QBase(p, p * p);
  }

  const Real& p() const { return p_; }
  const Real& q() const { return q_; }
  /// Base q^2, with p' = q.
  QBase squared() const { return QBase(q_, q_ * q_); }
  /// p^k = q^{k/2}
  Real half_power(long k) const { return pow(p_, k); }

 private:
  QBase(Real p, Real q) : p_(std::move(p)), q_(std::move(q)) {}
  Real p_;
  Real q_;
};

}  // namespace qbil
