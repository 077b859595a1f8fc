// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "qbil/numeric/precision.hpp"
#include "qbil/qseries/qbase.hpp"

namespace qbil {

/// (beta, w) with alpha = -1/beta^2 and gamma = q/beta, so alpha beta^2 = -1 and beta gamma = q exactly.
struct ConstrainedParams {
  QBase base;
  Complex beta;
  Complex w;
  Complex alpha;
  Complex gamma;
  Complex z;  // gamma w / (alpha q^{1/2}) = -p beta w

  /// Derives alpha, gamma, z; throws std::logic_error if the two forms of z disagree beyond rounding.
  static ConstrainedParams make(const QBase& base, const Complex& beta, const Complex& w, const PrecisionContext& ctx);
};

/// (a, w) with alpha = -a, beta = -a^{-1/2}, gamma = -a^{1/2} q.
struct PhysicsParams {
  QBase base;
  Complex a;
  Complex w;

  ConstrainedParams embed(const PrecisionContext& ctx) const;
};

struct RamanujanParams {
  QBase base;
  Complex a, b, z;
};

struct QBinomParams {
  QBase base;
  Complex a, z;
};

struct ThetaParams {
  QBase base;
  Complex z;
  std::vector<long> ks{-2, -1, 1, 2};
};

struct PairParams {
  QBase base;
  Complex xi, eta;
};

struct HornParams {
  Complex a, c, z;
  double target = 1e-8;
};

struct DougallParams {
  Complex a, b, c, d;
  double target = 1e-8;
};

struct LimitMainParams {
  Real b;
  Complex w;
  double target = 1e-12;
};

using IdentityParams = std::variant<ConstrainedParams, PhysicsParams, RamanujanParams, QBinomParams, ThetaParams,
                                    PairParams, HornParams, DougallParams, LimitMainParams>;

/// The same parameters at ctx's precision, with q^{1/2} and the constrained quantities recomputed.
IdentityParams at_precision(const IdentityParams& params, const PrecisionContext& ctx);

/// Name/value pairs for reports, values at the given number of significant digits.
std::vector<std::pair<std::string, std::string>> describe(const IdentityParams& params, int digits);

}  // namespace qbil
