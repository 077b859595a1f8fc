// SPDX-License-Identifier: Apache-2.0
#include "qbil/io/report_json.hpp"

namespace qbil {

namespace {

std::string small(const Real& r) { return r.str(6); }

}  // namespace

json to_json(const Complex& z, int digits) { return json{{"re", z.re.str(digits)}, {"im", z.im.str(digits)}}; }

json to_json(const Estimate& e, int digits) {
  return json{{"value", to_json(e.value, digits)}, {"err", small(e.err)}, {"terms", e.terms}};
}

json to_json(const IdentityReport& r) {
  const IdentityInfo& inf = info(r.id);
  json params = json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  return json{{"identity", inf.tag},
              {"paper_location", inf.location},
              {"anchor", inf.anchor},
              {"params", params},
              {"lhs", to_json(r.lhs)},
              {"rhs", to_json(r.rhs)},
              {"abs_err", small(r.abs_err)},
              {"rel_err", small(r.rel_err)},
              {"bounds", {{"lhs", small(r.lhs_bound)}, {"rhs", small(r.rhs_bound)}}},
              {"pass", r.pass},
              {"status", status_name(r.status)},
              {"truncation", {{"lhs_terms", r.lhs_terms}, {"rhs_terms", r.rhs_terms}, {"parts", r.parts}}},
              {"precision_bits", r.bits},
              {"sample", r.sample},
              {"notes", r.notes}};
}

json to_json(const ScanResult& r, const ScanConfig& cfg) {
  json ids = json::array();
  for (IdentityId id : cfg.identities) ids.push_back(tag(id));
  const ScanSummary& s = r.summary;
  json reports = json::array();
  for (const auto& rep : r.reports) reports.push_back(to_json(rep));
  return json{{"config", {{"identities", ids}, {"samples", cfg.samples}, {"seed", cfg.seed}, {"q", cfg.q_grid}}},
              {"summary",
               {{"total", s.total},
                {"passed", s.passed},
                {"failed", s.failed},
                {"indeterminate", s.indeterminate},
                {"reported", s.reported},
                {"budget_errors", s.budget_errors},
                {"domain_errors", s.domain_errors},
                {"max_rel_err", small(s.max_rel_err)},
                {"failures", s.failures}}},
              {"reports", reports}};
}

json to_json(const FormalResult& r, const RationalParams& rp) {
  json j{{"identity", tag(r.id)},
         {"paper_location", info(r.id).location},
         {"params", {{"beta", rp.beta.get_str()}, {"w", rp.w.get_str()}, {"z", rp.z.get_str()}}},
         {"order", r.order},
         {"working_order", r.working_order},
         {"parts", r.parts},
         {"pass", r.pass}};
  if (!r.pass)
    j["first_failing"] = {{"order", r.first_failing}, {"coefficient", r.coefficient}, {"part", r.failing_part + 1}};
  return j;
}

json to_json(const LimitTable& t) {
  json rows = json::array();
  for (const LimitRow& row : t.rows) {
    json j{{"k", row.k}, {"q", row.q.str(20)}, {"ok", row.ok}};
    if (row.error.empty()) {
      j["lhs"] = to_json(row.lhs);
      j["rhs"] = to_json(row.rhs);
      j["ratio"] = to_json(row.ratio);
      j["ratio_err"] = small(row.ratio_err);
    } else {
      j["error"] = row.error;
    }
    rows.push_back(j);
  }
  json j{{"identity", tag(t.identity)},
         {"params", {{"b", t.params.b.str(20)}, {"w", to_json(t.params.w, 20)}}},
         {"rows", rows},
         {"ratios_ok", t.ratios_ok},
         {"budget_exhausted", t.budget_exhausted},
         {"closed_form_mainlim2", to_json(t.closed_form_mainlim2)},
         {"lhs_via_1H1", to_json(t.via_H)},
         {"horn_value", to_json(t.horn_value)}};
  if (!t.extrapolated) j["extrapolation_error"] = t.extrapolation_error;
  if (t.extrapolated) {
    j["extrapolated_lhs"] = to_json(t.extrapolated_lhs);
    j["extrapolated_rhs"] = to_json(t.extrapolated_rhs);
    j["constants"] = {{"lhs_limit_over_mainlim2_rhs", to_json(t.constant_mainlim2, 12)},
                      {"lhs_limit_over_horn_value", to_json(t.constant_horn, 12)}};
  }
  return j;
}

void write_csv(const LimitTable& t, std::ostream& out) {
  out << "k,q,lhs_re,lhs_im,rhs_re,rhs_im,ratio_re,ratio_im,lhs_err,rhs_err\n";
  for (const LimitRow& r : t.rows) {
    if (!r.error.empty()) continue;
    out << r.k << ',' << r.q.str(20) << ',' << r.lhs.value.re.str(kValueDigits) << ','
        << r.lhs.value.im.str(kValueDigits) << ',' << r.rhs.value.re.str(kValueDigits) << ','
        << r.rhs.value.im.str(kValueDigits) << ',' << r.ratio.re.str(kValueDigits) << ','
        << r.ratio.im.str(kValueDigits) << ',' << small(r.lhs.err) << ',' << small(r.rhs.err) << '\n';
  }
}

}  // namespace qbil
