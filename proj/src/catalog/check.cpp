// SPDX-License-Identifier: Apache-2.0
#include "qbil/catalog/check.hpp"

#include <string>

namespace qbil {

std::string_view status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Indeterminate: return "indeterminate";
    case Status::Reported: return "reported";
  }
  return "?";
}

bool tolerance_policy(const Real& abs_err, const Real& lhs_bound, const Real& rhs_bound, const Real& lhs_abs,
                      const Real& rhs_abs, const PrecisionContext& ctx) {
  Real allowed = (lhs_bound.with_bits(64) + rhs_bound.with_bits(64)) * 4L +
                 ctx.tol() * max(lhs_abs.with_bits(64), rhs_abs.with_bits(64));
  return abs_err <= allowed;
}

namespace {

void append(std::string& notes, std::string_view s) {
  if (s.empty()) return;
  if (!notes.empty()) notes += "; ";
  notes += s;
}

}  // namespace

IdentityReport check(IdentityId id, const IdentityParams& params, const PrecisionContext& ctx) {
  DomainResult dom = domain_check(id, params);
  if (!dom.ok) throw DomainError(std::string(tag(id)) + ": " + dom.reason);

  IdentityReport rep;
  rep.id = id;
  rep.params = describe(params, 30);
  rep.bits = ctx.bits();
  append(rep.notes, info(id).note);

  std::vector<Estimate> lhs, rhs;
  try {
    lhs = eval_side(id, Side::LHS, params, ctx);
    rhs = eval_side(id, Side::RHS, params, ctx);
  } catch (const PoleError& e) {
    // lhs already evaluated if the pole came from the right-hand side
    rep.status = Status::Indeterminate;
    rep.pass = false;
    append(rep.notes, std::string(lhs.empty() ? "left" : "right") + "-hand side at a pole: " + e.what());
    if (!lhs.empty()) {
      rep.lhs = lhs.front().value;
      rep.lhs_bound = lhs.front().err;
    }
    return rep;
  }

  rep.parts = static_cast<long>(lhs.size());
  bool all_pass = true;
  long worst = -1;
  Real worst_score(64);
  for (size_t i = 0; i < lhs.size(); ++i) {
    const Estimate &l = lhs[i], &r = rhs[i];
    rep.lhs_terms += l.terms;
    rep.rhs_terms += r.terms;
    Real diff = abs(l.value - r.value).with_bits(64);
    Real la = abs(l.value).with_bits(64), ra = abs(r.value).with_bits(64);
    bool ok = tolerance_policy(diff, l.err, r.err, la, ra, ctx);
    Real allowed = (l.err + r.err) * 4L + ctx.tol() * max(la, ra);
    Real score = allowed.is_zero() ? (diff.is_zero() ? Real(64) : Real(1e300, 64)) : diff / allowed;
    // failing parts outrank passing ones, then the larger score
    bool take = worst < 0 || (!ok && all_pass) || (ok == all_pass && score > worst_score);
    if (take) {
      worst = static_cast<long>(i);
      worst_score = score;
      rep.lhs = l.value;
      rep.rhs = r.value;
      rep.abs_err = diff;
      Real m = max(la, ra);
      rep.rel_err = m.is_zero() ? diff : diff / m;
      rep.lhs_bound = l.err;
      rep.rhs_bound = r.err;
    }
    all_pass = all_pass && ok;
  }
  if (rep.parts > 1)
    append(rep.notes, "part " + std::to_string(worst + 1) + " of " + std::to_string(rep.parts) + " shown");
  rep.pass = all_pass;
  if (id == IdentityId::LIMIT_MAIN)
    rep.status = Status::Reported;
  else
    rep.status = all_pass ? Status::Pass : Status::Fail;
  return rep;
}

}  // namespace qbil
