// SPDX-License-Identifier: Apache-2.0
#include "cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>

#include "qbil/catalog/scan.hpp"
#include "qbil/formal/formal_check.hpp"
#include "qbil/io/literals.hpp"
#include "qbil/io/report_json.hpp"
#include "qbil/numeric/classical.hpp"
#include "qbil/qseries/psi.hpp"
#include "qbil/qseries/qpoch.hpp"
#include "qbil/qseries/theta.hpp"

namespace qbil {

namespace {

enum Exit { kOk = 0, kFail = 1, kUsage = 2, kBudget = 3 };

struct UsageError : Error {
  using Error::Error;
};

// Parameter literals shared by eval and verify.
struct Lits {
  std::map<std::string, std::string> v;

  bool has(const std::string& k) const {
    auto it = v.find(k);
    return it != v.end() && !it->second.empty();
  }
  const std::string& get(const std::string& k) const {
    if (!has(k)) throw UsageError("missing --" + k);
    return v.at(k);
  }
  Complex cx(const std::string& k, mpfr_prec_t bits) const { return parse_complex(get(k), bits); }
  Real re(const std::string& k, mpfr_prec_t bits) const { return parse_real(get(k), bits); }
  QBase base(mpfr_prec_t bits) const { return QBase::from_q(re("q", bits)); }
  double dbl(const std::string& k, double fallback) const { return has(k) ? std::stod(get(k)) : fallback; }
};

struct Opts {
  int prec = 256;
  std::uint64_t seed = 42;
  std::string format = "json";
  std::string output_path;
  bool deterministic = false;
  std::string paper_location;

  std::string function;
  std::string identity;
  Lits lits;
  long n = 0;
  bool has_n = false;
  long max_terms = 0;

  long samples = 20;
  std::string scan_identity = "all";
  std::string q_grid = "0.3,0.5,0.7";
  unsigned threads = 0;

  long order = 50;
  std::string formal_beta = "2/3", formal_w = "1/5", formal_z = "2/3", formal_k = "-2,-1,1,2";

  std::string k_range = "3..10";
  std::string limit_identity = "COR1";
  long rich_order = 3;
};

std::string timestamp() {
  std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

std::vector<long> parse_long_list(const std::string& s) {
  std::vector<long> out;
  for (double d : parse_double_list(s)) {
    if (d != static_cast<double>(static_cast<long>(d))) throw ParseError("expected integers in '" + s + "'");
    out.push_back(static_cast<long>(d));
  }
  return out;
}

json envelope(const Opts& o, const std::string& command, json result) {
  json j{{"tool", "qbil"}, {"command", command}, {"precision_bits", o.prec}, {"seed", o.seed}};
  if (!o.deterministic) j["generated_at"] = timestamp();
  j["result"] = std::move(result);
  return j;
}

void emit(const Opts& o, const std::string& text, std::ostream& out) {
  if (o.output_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.output_path, std::ios::binary);
  if (!f) throw UsageError("cannot write " + o.output_path);
  f << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

// eval

int cmd_eval(const Opts& o, std::ostream& out) {
  PrecisionContext ctx(o.prec);
  const mpfr_prec_t bits = ctx.bits();
  const Lits& L = o.lits;
  const std::string& fn = o.function;
  const long budget = o.max_terms > 0 ? o.max_terms : kClassicalMaxTerms;
  const double target = L.dbl("target", 0.0);
  Estimate e;
  json args = json::object();
  for (const auto& [k, v] : L.v)
    if (!v.empty()) args[k] = v;
  if (fn == "qpoch") {
    QBase b = L.base(bits);
    if (o.has_n) {
      e = Estimate::exact(qpoch_finite(L.cx("a", bits), b.q(), o.n, ctx));
      e.err = abs(e.value).with_bits(64) * ctx.ulp() * (4L * std::labs(o.n) + 4L);
      args["n"] = o.n;
    } else {
      e = qpoch_inf(L.cx("a", bits), b.q(), ctx);
    }
  } else if (fn == "theta") {
    e = theta_series(L.cx("z", bits), L.base(bits), ctx);
  } else if (fn == "qgamma") {
    e = q_gamma(L.cx("z", bits), L.base(bits), ctx);
  } else if (fn == "psi") {
    PsiSpec spec;
    for (const char* key : {"a", "b"}) {
      std::string s = L.has(key) ? L.get(key) : "";
      auto& dst = key[0] == 'a' ? spec.a : spec.b;
      for (size_t pos = 0; !s.empty();) {
        size_t comma = s.find(',', pos);
        dst.push_back(parse_complex(s.substr(pos, comma - pos), bits));
        if (comma == std::string::npos) break;
        pos = comma + 1;
      }
    }
    PsiOptions po;
    if (o.max_terms > 0) po.max_terms = o.max_terms;
    po.target = target;
    e = psi_bilateral(spec, L.base(bits).q(), L.cx("z", bits), ctx, po);
  } else if (fn == "h1") {
    e = eval_1H1(L.cx("a", bits), L.cx("c", bits), L.cx("z", bits), ctx, budget, target);
  } else if (fn == "h2") {
    e = eval_2H2(L.cx("a", bits), L.cx("b", bits), L.cx("c", bits), L.cx("d", bits), L.cx("z", bits), ctx, budget,
                 target);
  } else if (fn == "horn") {
    e = horn_closed_form(L.cx("a", bits), L.cx("c", bits), L.cx("z", bits), ctx);
  } else if (fn == "dougall") {
    e = dougall_closed_form(L.cx("a", bits), L.cx("b", bits), L.cx("c", bits), L.cx("d", bits), ctx);
  } else if (fn == "ramanujan_rhs") {
    e = ramanujan_rhs(L.cx("a", bits), L.cx("b", bits), L.base(bits).q(), L.cx("z", bits), ctx);
  } else {
    throw UsageError("unknown function '" + fn + "'");
  }
  if (o.format == "text") {
    emit(o, fn + " = " + e.value.str(kValueDigits) + "\nerror bound: " + e.err.str(6) +
                "\nterms: " + std::to_string(e.terms) + "\n",
         out);
  } else {
    json r{{"function", fn}, {"args", args}, {"value", to_json(e.value)}, {"err", e.err.str(6)}, {"terms", e.terms}};
    emit(o, dump(envelope(o, "eval", r)), out);
  }
  return kOk;
}

// verify

IdentityParams build_params(IdentityId id, const Lits& L, const PrecisionContext& ctx) {
  const mpfr_prec_t bits = ctx.bits();
  switch (info(id).kind) {
    case ParamKind::Constrained: return ConstrainedParams::make(L.base(bits), L.cx("beta", bits), L.cx("w", bits), ctx);
    case ParamKind::Physics: return PhysicsParams{L.base(bits), L.cx("a", bits), L.cx("w", bits)};
    case ParamKind::Ramanujan: return RamanujanParams{L.base(bits), L.cx("a", bits), L.cx("b", bits), L.cx("z", bits)};
    case ParamKind::QBinom: return QBinomParams{L.base(bits), L.cx("a", bits), L.cx("z", bits)};
    case ParamKind::Theta: {
      ThetaParams t{L.base(bits), L.cx("z", bits)};
      if (L.has("k")) t.ks = parse_long_list(L.get("k"));
      return t;
    }
    case ParamKind::Pair: return PairParams{L.base(bits), L.cx("xi", bits), L.cx("eta", bits)};
    case ParamKind::Horn: return HornParams{L.cx("a", bits), L.cx("c", bits), L.cx("z", bits), L.dbl("target", 1e-8)};
    case ParamKind::Dougall:
      return DougallParams{L.cx("a", bits), L.cx("b", bits), L.cx("c", bits), L.cx("d", bits), L.dbl("target", 1e-8)};
    case ParamKind::LimitMain: return LimitMainParams{L.re("b", bits), L.cx("w", bits), L.dbl("target", 1e-12)};
  }
  throw UsageError("unsupported identity");
}

std::string render(const IdentityReport& r) {
  std::ostringstream os;
  const IdentityInfo& inf = info(r.id);
  os << "identity: " << inf.tag << "\nlocation: " << inf.location << "\n";
  for (const auto& [k, v] : r.params) os << "  " << k << " = " << v << "\n";
  os << "lhs: " << r.lhs.str(kValueDigits) << "  (bound " << r.lhs_bound.str(3) << ")\n"
     << "rhs: " << r.rhs.str(kValueDigits) << "  (bound " << r.rhs_bound.str(3) << ")\n"
     << "abs_err: " << r.abs_err.str(3) << "  rel_err: " << r.rel_err.str(3) << "\n";
  if (!r.notes.empty()) os << "notes: " << r.notes << "\n";
  os << "result: " << status_name(r.status) << "\n";
  return os.str();
}

int status_exit(Status s) {
  switch (s) {
    case Status::Pass:
    case Status::Reported: return kOk;
    case Status::Fail: return kFail;
    case Status::Indeterminate: return kUsage;
  }
  return kFail;
}

int cmd_verify(const Opts& o, std::ostream& out) {
  PrecisionContext ctx(o.prec);
  if (o.identity.empty()) throw UsageError("missing --identity");
  IdentityId id = parse_identity(o.identity);
  IdentityReport r = check(id, build_params(id, o.lits, ctx), ctx);
  emit(o, o.format == "text" ? render(r) : dump(envelope(o, "verify", to_json(r))), out);
  return status_exit(r.status);
}

// scan

std::vector<IdentityId> parse_identity_list(const std::string& s) {
  std::vector<IdentityId> ids;
  if (s == "all") {
    for (const auto& inf : registry()) ids.push_back(inf.id);
    return ids;
  }
  size_t pos = 0;
  while (true) {
    size_t comma = s.find(',', pos);
    ids.push_back(parse_identity(s.substr(pos, comma - pos)));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return ids;
}

int cmd_scan(const Opts& o, std::ostream& out) {
  PrecisionContext ctx(o.prec);
  ScanConfig cfg;
  cfg.identities = parse_identity_list(o.scan_identity);
  if (o.samples < 0) throw UsageError("--samples must be non-negative");
  cfg.samples = o.samples;
  cfg.seed = o.seed;
  cfg.q_grid = parse_double_list(o.q_grid);
  for (double q : cfg.q_grid)
    if (!(q > 0 && q < 1)) throw DomainError("q grid values must lie in (0, 1)");
  cfg.threads = o.threads;
  ScanResult res = scan(cfg, ctx);
  const ScanSummary& s = res.summary;
  if (o.format == "text") {
    std::ostringstream os;
    std::map<std::string, std::pair<long, long>> per;  // passes, total
    for (const auto& r : res.reports) {
      auto& e = per[std::string(tag(r.id))];
      e.second++;
      if (r.status == Status::Pass || r.status == Status::Reported) e.first++;
    }
    for (IdentityId id : cfg.identities) {
      auto e = per[std::string(tag(id))];
      os << std::left << std::setw(12) << tag(id) << e.first << "/" << e.second << "\n";
    }
    os << "total " << s.total << ", passed " << s.passed << ", failed " << s.failed << ", indeterminate "
       << s.indeterminate << ", reported " << s.reported << ", max rel_err " << s.max_rel_err.str(3) << "\n";
    emit(o, os.str(), out);
  } else {
    emit(o, dump(envelope(o, "scan", to_json(res, cfg))), out);
  }
  int code = kOk;
  if (s.failed > 0) code = kFail;
  if (s.domain_errors > 0) code = kUsage;
  if (s.budget_errors > 0) code = kBudget;
  return code;
}

// formal

int cmd_formal(const Opts& o, std::ostream& out) {
  if (o.identity.empty()) throw UsageError("missing --identity");
  IdentityId id = parse_identity(o.identity);
  RationalParams rp;
  rp.beta = parse_rational(o.formal_beta);
  rp.w = parse_rational(o.formal_w);
  rp.z = parse_rational(o.formal_z);
  rp.ks = parse_long_list(o.formal_k);
  FormalResult r = formal_check(id, rp, o.order);
  if (o.format == "text") {
    std::ostringstream os;
    os << tag(id) << " through p^" << r.order << ": ";
    if (r.pass)
      os << "pass\n";
    else
      os << "fail, first nonzero coefficient of LHS - RHS at p^" << r.first_failing << " = " << r.coefficient
         << (r.parts > 1 ? " (part " + std::to_string(r.failing_part + 1) + ")" : "") << "\n";
    emit(o, os.str(), out);
  } else {
    emit(o, dump(envelope(o, "formal", to_json(r, rp))), out);
  }
  return r.pass ? kOk : kFail;
}

// limit

int cmd_limit(const Opts& o, std::ostream& out) {
  PrecisionContext ctx(o.prec);
  LimitParams lp = LimitParams::make(o.lits.re("b", ctx.bits()), o.lits.cx("w", ctx.bits()), ctx);
  auto [k0, k1] = parse_range(o.k_range);
  if (k0 < 2 || k1 < k0) throw UsageError("--k must be a range a..b with 2 <= a <= b");
  LimitOptions lo;
  lo.identity = parse_identity(o.limit_identity);
  if (lo.identity != IdentityId::COR1 && lo.identity != IdentityId::COR2)
    throw UsageError("limit works with COR1 or COR2");
  lo.order = o.rich_order;
  if (o.max_terms > 0) lo.max_terms = o.max_terms;
  LimitTable t = limit_report(lp, k0, k1, ctx, lo);
  if (o.format == "csv") {
    std::ostringstream os;
    write_csv(t, os);
    emit(o, os.str(), out);
  } else if (o.format == "text") {
    std::ostringstream os;
    os << "k  q  |ratio - 1|  lhs\n";
    for (const auto& r : t.rows) {
      if (!r.error.empty()) {
        os << r.k << "  " << r.q.str(8) << "  error: " << r.error << "\n";
        continue;
      }
      os << r.k << "  " << r.q.str(8) << "  " << abs(r.ratio - 1L).str(3) << "  " << r.lhs.value.str(15) << "\n";
    }
    if (t.extrapolated) {
      os << "extrapolated lhs: " << t.extrapolated_lhs.value.str(12) << " +- " << t.extrapolated_lhs.err.str(2) << "\n"
         << "extrapolated rhs: " << t.extrapolated_rhs.value.str(12) << " +- " << t.extrapolated_rhs.err.str(2) << "\n";
    }
    os << "mainlim2 rhs: " << t.closed_form_mainlim2.value.str(15) << "\n"
       << "2^(2b+1)/Gamma(b+1) 1H1(-b; b+1; w): " << t.via_H.value.str(15) << "\n";
    if (!t.extrapolated) os << "no extrapolation: " << t.extrapolation_error << "\n";
    if (t.extrapolated)
      os << "constant lhs_limit / mainlim2_rhs: " << t.constant_mainlim2.str(10) << "\n"
         << "constant lhs_limit / horn value: " << t.constant_horn.str(10) << "\n";
    emit(o, os.str(), out);
  } else {
    emit(o, dump(envelope(o, "limit", to_json(t))), out);
  }
  if (t.budget_exhausted || !t.extrapolated) return kBudget;
  return t.ratios_ok ? kOk : kFail;
}

void add_lits(CLI::App* sub, Opts& o, std::initializer_list<const char*> keys) {
  for (const char* k : keys) {
    std::string& dst = o.lits.v[k];
    sub->add_option(std::string("--") + k, dst, std::string("parameter ") + k);
  }
}

}  // namespace

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  Opts o;
  CLI::App app{"q-series identity verification"};
  app.name("qbil");
  app.fallthrough();
  app.require_subcommand(0, 1);
  app.set_config("--config", "", "flat key = value file mirroring the flags");
  app.allow_config_extras(CLI::config_extras_mode::error);
  app.add_option("--prec", o.prec, "precision in bits (default 256)")->envname("QBILAT_PREC")->check(CLI::Range(64, 1 << 20));
  app.add_option("--seed", o.seed, "sampler seed");
  app.add_option("--output", o.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--output-path", o.output_path, "write the report to a file");
  app.add_flag("--deterministic", o.deterministic, "omit the timestamp");
  app.add_option("--paper-location", o.paper_location, "print the location and anchor of an identity");

  auto* ev = app.add_subcommand("eval", "evaluate a function");
  ev->add_option("function", o.function, "qpoch, theta, qgamma, psi, h1, h2, horn, dougall, ramanujan_rhs")
      ->required();
  add_lits(ev, o, {"a", "b", "c", "d", "q", "z", "target"});
  auto* nopt = ev->add_option("--n", o.n, "finite length for qpoch");
  ev->add_option("--max-terms", o.max_terms, "term budget");

  auto* ve = app.add_subcommand("verify", "check one identity");
  ve->add_option("--identity", o.identity, "identity tag")->required();
  add_lits(ve, o, {"q", "beta", "w", "a", "b", "c", "d", "z", "xi", "eta", "k", "target"});

  auto* sc = app.add_subcommand("scan", "randomized checks");
  sc->add_option("--identity", o.scan_identity, "tag, comma list or all");
  sc->add_option("--samples", o.samples, "samples per identity");
  sc->add_option("--q", o.q_grid, "comma-separated q grid");
  sc->add_option("--threads", o.threads, "worker threads (0 = all cores)");

  auto* fo = app.add_subcommand("formal", "exact series check");
  fo->add_option("--identity", o.identity, "identity tag")->required();
  fo->add_option("--beta", o.formal_beta, "rational beta (or xi)");
  fo->add_option("--w", o.formal_w, "rational w (or eta)");
  fo->add_option("--z", o.formal_z, "rational z for the theta identities");
  fo->add_option("--k", o.formal_k, "shifts for THETA_QDIFF");
  fo->add_option("--order", o.order, "order in p (default 50)");

  auto* li = app.add_subcommand("limit", "q -> 1 study");
  add_lits(li, o, {"b", "w"});
  li->add_option("--k", o.k_range, "range kmin..kmax of q = 1 - 2^-k");
  li->add_option("--identity", o.limit_identity, "COR1 or COR2");
  li->add_option("--richardson-order", o.rich_order, "extrapolation order");
  li->add_option("--max-terms", o.max_terms, "term budget per series");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  o.has_n = nopt->count() > 0;

  try {
    if (!o.paper_location.empty()) {
      const IdentityInfo& inf = info(parse_identity(o.paper_location));
      out << inf.tag << ": " << inf.location << "\nanchor: \"" << inf.anchor << "\"\n";
      if (!inf.note.empty()) out << "note: " << inf.note << "\n";
      return kOk;
    }
    if (ev->parsed()) return cmd_eval(o, out);
    if (ve->parsed()) return cmd_verify(o, out);
    if (sc->parsed()) return cmd_scan(o, out);
    if (fo->parsed()) return cmd_formal(o, out);
    if (li->parsed()) return cmd_limit(o, out);
    out << app.help();
    return kUsage;
  } catch (const BudgetError& e) {
    err << "budget: " << e.what() << "\n";
    return kBudget;
  } catch (const PrecisionContractError& e) {
    err << "precision: " << e.what() << "\n";
    return kBudget;
  } catch (const InsufficientDataError& e) {
    err << "precision: " << e.what() << "\n";
    return kBudget;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: bad number: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace qbil
