// SPDX-License-Identifier: Apache-2.0
#include "qbil/catalog/params.hpp"

#include <stdexcept>
#include <type_traits>

namespace qbil {

ConstrainedParams ConstrainedParams::make(const QBase& base, const Complex& beta, const Complex& w,
                                          const PrecisionContext& ctx) {
  if (beta.is_zero()) throw DomainError("beta must be nonzero");
  if (w.is_zero()) throw DomainError("w must be nonzero");
  const mpfr_prec_t bits = ctx.bits();
  Complex b = beta.with_bits(bits), ww = w.with_bits(bits);
  Complex one(1L, bits);
  Complex alpha = -(one / (b * b));
  Complex gamma = Complex(base.q().with_bits(bits), Real(bits)) / b;
  Real p = base.p().with_bits(bits);
  Complex z = -(b * ww * p);
  Complex z2 = gamma * ww / (alpha * p);
  if (abs(z - z2) > ctx.tol() * 16L * max(Real(1L, 64), abs(z).with_bits(64)))
    throw std::logic_error("series argument: gamma w/(alpha q^1/2) differs from -p beta w");
  return {base, b, ww, alpha, gamma, z};
}

ConstrainedParams PhysicsParams::embed(const PrecisionContext& ctx) const {
  if (a.is_zero()) throw DomainError("a must be nonzero");
  Complex one(1L, ctx.bits());
  Complex beta = -(one / sqrt(a.with_bits(ctx.bits())));
  return ConstrainedParams::make(base, beta, w, ctx);
}

IdentityParams at_precision(const IdentityParams& params, const PrecisionContext& ctx) {
  const mpfr_prec_t bits = ctx.bits();
  auto base = [&](const QBase& b) { return QBase::from_q(b.q().with_bits(bits)); };
  auto c = [&](const Complex& z) { return z.with_bits(bits); };
  return std::visit(
      [&](const auto& p) -> IdentityParams {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, ConstrainedParams>) {
          return ConstrainedParams::make(base(p.base), c(p.beta), c(p.w), ctx);
        } else if constexpr (std::is_same_v<T, PhysicsParams>) {
          return PhysicsParams{base(p.base), c(p.a), c(p.w)};
        } else if constexpr (std::is_same_v<T, RamanujanParams>) {
          return RamanujanParams{base(p.base), c(p.a), c(p.b), c(p.z)};
        } else if constexpr (std::is_same_v<T, QBinomParams>) {
          return QBinomParams{base(p.base), c(p.a), c(p.z)};
        } else if constexpr (std::is_same_v<T, ThetaParams>) {
          return ThetaParams{base(p.base), c(p.z), p.ks};
        } else if constexpr (std::is_same_v<T, PairParams>) {
          return PairParams{base(p.base), c(p.xi), c(p.eta)};
        } else if constexpr (std::is_same_v<T, HornParams>) {
          return HornParams{c(p.a), c(p.c), c(p.z), p.target};
        } else if constexpr (std::is_same_v<T, DougallParams>) {
          return DougallParams{c(p.a), c(p.b), c(p.c), c(p.d), p.target};
        } else {
          return LimitMainParams{p.b.with_bits(bits), c(p.w), p.target};
        }
      },
      params);
}

namespace {

using Fields = std::vector<std::pair<std::string, std::string>>;

void put_q(Fields& f, const QBase& base, int digits) { f.emplace_back("q", base.q().str(digits)); }

}  // namespace

std::vector<std::pair<std::string, std::string>> describe(const IdentityParams& params, int digits) {
  Fields f;
  std::visit(
      [&](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, ConstrainedParams>) {
          put_q(f, p.base, digits);
          f.emplace_back("beta", p.beta.str(digits));
          f.emplace_back("w", p.w.str(digits));
          f.emplace_back("alpha", p.alpha.str(digits));
          f.emplace_back("gamma", p.gamma.str(digits));
          f.emplace_back("z", p.z.str(digits));
        } else if constexpr (std::is_same_v<T, PhysicsParams>) {
          put_q(f, p.base, digits);
          f.emplace_back("a", p.a.str(digits));
          f.emplace_back("w", p.w.str(digits));
        } else if constexpr (std::is_same_v<T, RamanujanParams>) {
          put_q(f, p.base, digits);
          f.emplace_back("a", p.a.str(digits));
          f.emplace_back("b", p.b.str(digits));
          f.emplace_back("z", p.z.str(digits));
        } else if constexpr (std::is_same_v<T, QBinomParams>) {
          put_q(f, p.base, digits);
          f.emplace_back("a", p.a.str(digits));
          f.emplace_back("z", p.z.str(digits));
        } else if constexpr (std::is_same_v<T, ThetaParams>) {
          put_q(f, p.base, digits);
          f.emplace_back("z", p.z.str(digits));
          std::string ks;
          for (long k : p.ks) ks += (ks.empty() ? "" : ",") + std::to_string(k);
          f.emplace_back("k", ks);
        } else if constexpr (std::is_same_v<T, PairParams>) {
          put_q(f, p.base, digits);
          f.emplace_back("xi", p.xi.str(digits));
          f.emplace_back("eta", p.eta.str(digits));
        } else if constexpr (std::is_same_v<T, HornParams>) {
          f.emplace_back("a", p.a.str(digits));
          f.emplace_back("c", p.c.str(digits));
          f.emplace_back("z", p.z.str(digits));
        } else if constexpr (std::is_same_v<T, DougallParams>) {
          f.emplace_back("a", p.a.str(digits));
          f.emplace_back("b", p.b.str(digits));
          f.emplace_back("c", p.c.str(digits));
          f.emplace_back("d", p.d.str(digits));
        } else if constexpr (std::is_same_v<T, LimitMainParams>) {
          f.emplace_back("b", p.b.str(digits));
          f.emplace_back("w", p.w.str(digits));
        }
      },
      params);
  return f;
}

}  // namespace qbil
