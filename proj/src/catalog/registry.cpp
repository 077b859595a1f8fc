// SPDX-License-Identifier: Apache-2.0
#include "qbil/catalog/registry.hpp"

#include <string>

#include "qbil/errors.hpp"

namespace qbil {

namespace {

using K = ParamKind;
using I = IdentityId;

constexpr std::string_view kInfNote =
    "(alpha^2 beta^2; q^2) printed without the infinity subscript; read as the infinite product";

const std::vector<IdentityInfo> kRegistry = {
    {I::MAIN1, "MAIN1", K::Constrained, "section 3, first main theorem (sum of the two 1psi1 branches)",
     "where αβ² = −1 and βγ = q", kInfNote, true},
    {I::MAIN2, "MAIN2", K::Constrained, "section 3, second main theorem (difference of the two 1psi1 branches)",
     "where αβ² = −1 and βγ = q", kInfNote, true},
    {I::COR1, "COR1", K::Constrained, "section 3, corollary of the first main theorem (prefactor moved right)",
     "We obtain the following corollaries immediately", kInfNote, true},
    {I::COR2, "COR2", K::Constrained, "section 3, corollary of the second main theorem (prefactor moved right)",
     "We obtain the following corollaries immediately", kInfNote, true},
    {I::LEM1, "LEM1", K::Pair, "section 3.2, lemma on symmetrized base-q^2 theta functions",
     "by using the inversion formula of the theta function", "", false},
    {I::CO3, "CO3", K::Constrained, "section 3.2, lemma specialized at xi = alpha beta/q^1/2, eta = 1/w",
     "If we put ξ = αβ/q^{1/2}", "", false},
    {I::CO4, "CO4", K::Constrained, "section 3.2, four product relations at xi, eta built from alpha beta/q^1/2 and w",
     "For the specific parameter combinations",
     "each printed line inherits the parity gap of P1 and fails; their pairwise sums hold", false},
    {I::CO5, "CO5", K::Constrained, "section 3.2, product-to-sum identity for base-q^2 theta products",
     "in the last two steps", "", true},
    {I::CORL3, "CORL3", K::Constrained, "section 3.2, lemma specialized at xi = alpha beta q/q^1/2, eta = 1/w",
     "If we put ξ = αβq/q^{1/2}", "", false},
    {I::CORL4, "CORL4", K::Constrained, "section 3.2, four product relations with alpha beta/q^1/2 shifted by q",
     "For the specific parameter combinations",
     "each printed line inherits the parity gap of P1 and fails; their pairwise sums hold", false},
    {I::COROL1, "COROL1", K::Constrained, "section 3.2, shifted product-to-sum identity",
     "another product-to-sum identity of the theta function", "", true},
    {I::CO6, "CO6", K::Constrained, "section 3.3, unit relation used in the first proof",
     "we would like to show the following relation", "", true},
    {I::CO7, "CO7", K::Constrained, "section 3.3, product identity closing the first proof",
     "immediately state the following identity", "", true},
    {I::CORO1, "CORO1", K::Constrained, "section 3.4, alpha beta relation used in the second proof",
     "we would like to show the following relation", "", true},
    {I::CORO2, "CORO2", K::Constrained, "section 3.4, product identity closing the second proof",
     "claim the following identity",
     "printed right-hand denominator (γwq/(αq^{1/2}), q^{3/2}/(αβw); q²) replaced by (γw/(αq^{1/2}), "
     "q^{1/2}/(αβw); q²), the form used in the proof; the printed form is false",
     true},
    {I::P1, "P1", K::Pair, "section 3.2, product formula for theta functions with bases q and q^2",
     "product formula of the theta functions",
     "checked as printed; the printed statement drops the parity constraint and is false in general", true},
    {I::PHYS1, "PHYS1", K::Physics, "section 3.5, first specialization alpha = -a", "setting α = − a", "", false},
    {I::PHYS2, "PHYS2", K::Physics, "section 3.5, second specialization alpha = -a", "setting α = − a",
     "printed condition |q/a| < |q^{3/2}w/a^{1/2}| < 1 replaced by the first specialization's condition; the "
     "left-hand series are identical",
     false},
    {I::RAMANUJAN, "RAMANUJAN", K::Ramanujan, "section 3.1, Ramanujan's 1psi1 sum", "Ramanujan's sum for", "", true},
    {I::QBINOM, "QBINOM", K::QBinom, "section 3.1, q-binomial theorem",
     "``bilateral extension'' of the q-binomial theorem", "", true},
    {I::JTP, "JTP", K::Theta, "section 2, Jacobi triple product", "Jacobi's triple product identity is", "", true},
    {I::THETA_INV, "THETA_INV", K::Theta, "section 2, theta inversion", "has the inversion formula", "", true},
    {I::THETA_QDIFF, "THETA_QDIFF", K::Theta, "section 2, theta q-difference equation",
     "satisfies the q-difference equation", "", true},
    {I::HORN, "HORN", K::Horn, "section 3.1, bilateral binomial theorem", "the ``bilateral binomial theorem''", "",
     false},
    {I::DOUGALL, "DOUGALL", K::Dougall, "section 1, Dougall's 2H2 sum",
     "Dougall derived the bilateral hypergeometric identity", "", false},
    {I::LIMIT_MAIN, "LIMIT_MAIN", K::LimitMain, "section 4, q -> 1 limit theorem", "to show the following theorem",
     "stated for any w; evaluated on |w| = 1 only, where 1H1 converges; the printed constant is reported, not "
     "asserted",
     false},
};

}  // namespace

const std::vector<IdentityInfo>& registry() { return kRegistry; }

const IdentityInfo& info(IdentityId id) { return kRegistry.at(static_cast<size_t>(id)); }

std::string_view tag(IdentityId id) { return info(id).tag; }

IdentityId parse_identity(std::string_view t) {
  for (const auto& e : kRegistry)
    if (e.tag == t) return e.id;
  throw ParseError("unknown identity '" + std::string(t) + "'");
}

}  // namespace qbil
