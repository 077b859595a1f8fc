// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "qbil/numeric/precision.hpp"
#include "qbil/qseries/qbase.hpp"

namespace qbil {

/// Parameters of r psi s.
struct PsiSpec {
  std::vector<Complex> a;  // numerators, r of them
  std::vector<Complex> b;  // denominators, s of them
};

struct PsiOptions {
  long max_terms = 200000;  // both directions together
  double margin = 1e-3;     // relative distance kept from the convergence boundary
  bool override_margin = false;
  double target = 0.0;  // relative to the largest term; 0 means ctx.tol()
};

/// Bilateral r psi s (a; b; q, z) by symmetric partial sums with geometric tail bounds.
/// `q` is the base value (pass q*q for base q^2).
Estimate psi_bilateral(const PsiSpec& spec, const Real& q, const Complex& z, const PrecisionContext& ctx,
                       const PsiOptions& opts = {});

/// (q, b/a, az, q/az; q) / (b, q/a, z, b/az; q), valid on |b/a| < |z| < 1.
Estimate ramanujan_rhs(const Complex& a, const Complex& b, const Real& q, const Complex& z,
                       const PrecisionContext& ctx);

}  // namespace qbil
