// SPDX-License-Identifier: Apache-2.0
#include "qbil/catalog/scan.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <random>
#include <thread>

namespace qbil {

namespace {

constexpr double kTwoPi = 6.283185307179586;

class Draw {
 public:
  Draw(std::uint64_t seed, IdentityId id, long index, long attempt)
      : seq_(make_seq(seed, static_cast<std::uint64_t>(id), static_cast<std::uint64_t>(index),
                      static_cast<std::uint64_t>(attempt))),
        gen_(seq_) {}

  double uniform(double lo, double hi) {
    // 53 random bits, independent of the standard library's distribution code
    double u = static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
  }
  double log_uniform(double lo, double hi) { return std::exp(uniform(std::log(lo), std::log(hi))); }
  // argument kept 0.1 away from 0 and pi
  double arg_away() {
    double t = uniform(0.1, M_PI - 0.1);
    return uniform(0, 1) < 0.5 ? t : -t;
  }

 private:
  static std::seed_seq make_seq(std::uint64_t s, std::uint64_t id, std::uint64_t i, std::uint64_t a) {
    return std::seed_seq{static_cast<std::uint32_t>(s), static_cast<std::uint32_t>(s >> 32),
                         static_cast<std::uint32_t>(id), static_cast<std::uint32_t>(i),
                         static_cast<std::uint32_t>(i >> 32), static_cast<std::uint32_t>(a)};
  }
  std::seed_seq seq_;
  std::mt19937_64 gen_;
};

Complex polar(double r, double t, mpfr_prec_t bits) { return Complex(r * std::cos(t), r * std::sin(t), bits); }

Complex unit(double t, mpfr_prec_t bits) { return expi(Real(t, bits)); }

QBase base_of(double q, mpfr_prec_t bits) { return QBase::from_q(Real(q, bits)); }

std::vector<IdentityParams> draw_once(IdentityId id, Draw& d, const std::vector<double>& grid,
                                      const PrecisionContext& ctx) {
  const mpfr_prec_t bits = ctx.bits();
  const double qmax = grid.empty() ? 0.5 : *std::max_element(grid.begin(), grid.end());
  const double pmax = std::sqrt(qmax);
  std::vector<IdentityParams> out;
  auto per_q = [&](auto make) {
    for (double q : grid) out.push_back(make(base_of(q, bits)));
  };
  switch (info(id).kind) {
    case ParamKind::Constrained: {
      double rb = d.uniform(0.2, std::min(1.5, 0.75 / pmax));
      Complex beta = polar(rb, d.arg_away(), bits);
      double pb = pmax * rb;
      Complex w = polar(d.log_uniform(1.25 * pb, 0.8 / pb), d.uniform(-M_PI, M_PI), bits);
      per_q([&](const QBase& b) { return ConstrainedParams::make(b, beta, w, ctx); });
      break;
    }
    case ParamKind::Physics: {
      double ra = d.uniform(2 * qmax, 2 * qmax + 2);
      Complex a = polar(ra, d.uniform(-2.5, 2.5), bits);
      double s = std::sqrt(ra);
      Complex w = polar(d.log_uniform(1.25 * pmax / s, 0.8 * s / pmax), d.uniform(-M_PI, M_PI), bits);
      per_q([&](const QBase& b) { return PhysicsParams{b, a, w}; });
      break;
    }
    case ParamKind::Ramanujan: {
      double rz = d.uniform(0.2, 0.9), ra = d.uniform(0.3, 3);
      Complex z = polar(rz, d.uniform(-M_PI, M_PI), bits);
      Complex a = polar(ra, d.uniform(-M_PI, M_PI), bits);
      Complex b = polar(d.uniform(0.05, 1) * 0.8 * rz * ra, d.uniform(-M_PI, M_PI), bits);
      per_q([&](const QBase& base) { return RamanujanParams{base, a, b, z}; });
      break;
    }
    case ParamKind::QBinom: {
      Complex a = polar(d.uniform(0.1, 3), d.uniform(-M_PI, M_PI), bits);
      Complex z = polar(d.uniform(0.1, 0.9), d.uniform(-M_PI, M_PI), bits);
      per_q([&](const QBase& base) { return QBinomParams{base, a, z}; });
      break;
    }
    case ParamKind::Theta: {
      Complex z = polar(d.log_uniform(0.1, 10), d.uniform(-M_PI, M_PI), bits);
      per_q([&](const QBase& base) { return ThetaParams{base, z}; });
      break;
    }
    case ParamKind::Pair: {
      Complex xi = polar(d.log_uniform(0.2, 5), d.uniform(-M_PI, M_PI), bits);
      Complex eta = polar(d.log_uniform(0.2, 5), d.uniform(-M_PI, M_PI), bits);
      per_q([&](const QBase& base) { return PairParams{base, xi, eta}; });
      break;
    }
    case ParamKind::Horn: {
      Complex a(d.uniform(-1.5, 0.5), d.uniform(-0.3, 0.3), bits);
      Complex c = a + Complex(d.uniform(2, 4), d.uniform(-0.3, 0.3), bits);
      out.push_back(HornParams{a, c, unit(d.uniform(0.3, kTwoPi - 0.3), bits)});
      break;
    }
    case ParamKind::Dougall: {
      Complex a(d.uniform(-0.5, 0.5), d.uniform(-0.2, 0.2), bits);
      Complex b(d.uniform(-0.5, 0.5), d.uniform(-0.2, 0.2), bits);
      double s = d.uniform(3.5, 5);
      Complex c(d.uniform(1.2, 2.5), d.uniform(-0.2, 0.2), bits);
      Complex dd = a + b - c + Complex(s, 0.0, bits);
      out.push_back(DougallParams{a, b, c, dd});
      break;
    }
    case ParamKind::LimitMain: {
      out.push_back(LimitMainParams{Real(d.uniform(0.75, 2), bits), unit(d.uniform(0.3, kTwoPi - 0.3), bits), 1e-8});
      break;
    }
  }
  return out;
}

}  // namespace

std::vector<IdentityParams> sample_params(IdentityId id, std::uint64_t seed, long index,
                                          const std::vector<double>& q_grid, const PrecisionContext& ctx) {
  for (long attempt = 0; attempt < 64; ++attempt) {
    Draw d(seed, id, index, attempt);
    try {
      std::vector<IdentityParams> ps = draw_once(id, d, q_grid, ctx);
      bool ok = std::all_of(ps.begin(), ps.end(), [&](const IdentityParams& p) { return domain_check(id, p).ok; });
      if (ok) return ps;
    } catch (const DomainError&) {
    }
  }
  throw DomainError(std::string(tag(id)) + ": no in-domain sample after 64 attempts");
}

ScanResult scan(const ScanConfig& cfg, const PrecisionContext& ctx) {
  struct Job {
    IdentityId id;
    long sample;
  };
  std::vector<Job> jobs;
  for (IdentityId id : cfg.identities)
    for (long i = 0; i < cfg.samples; ++i) jobs.push_back({id, i});

  std::vector<std::vector<IdentityReport>> slots(jobs.size());
  std::vector<int> errs(jobs.size(), 0);  // 1 domain, 2 budget
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t j; (j = next++) < jobs.size();) {
      const Job& job = jobs[j];
      try {
        for (const IdentityParams& p : sample_params(job.id, cfg.seed, job.sample, cfg.q_grid, ctx)) {
          IdentityReport r;
          try {
            r = check(job.id, p, ctx);
          } catch (const BudgetError& e) {
            r.id = job.id;
            r.params = describe(p, 30);
            r.status = Status::Fail;
            r.notes = std::string("budget: ") + e.what();
            errs[j] = 2;
          }
          r.sample = job.sample;
          slots[j].push_back(std::move(r));
        }
      } catch (const DomainError&) {
        errs[j] = std::max(errs[j], 1);
      }
    }
  };
  unsigned n = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
  n = std::min<unsigned>(n, static_cast<unsigned>(std::max<size_t>(1, jobs.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  ScanResult res;
  ScanSummary& s = res.summary;
  for (size_t j = 0; j < jobs.size(); ++j) {
    if (errs[j] == 1) ++s.domain_errors;
    if (errs[j] == 2) ++s.budget_errors;
    for (IdentityReport& r : slots[j]) {
      ++s.total;
      switch (r.status) {
        case Status::Pass: ++s.passed; break;
        case Status::Fail:
          ++s.failed;
          s.failures.push_back(std::string(tag(r.id)) + "#" + std::to_string(r.sample));
          break;
        case Status::Indeterminate: ++s.indeterminate; break;
        case Status::Reported: ++s.reported; break;
      }
      if (r.status != Status::Reported && r.status != Status::Indeterminate && r.rel_err > s.max_rel_err)
        s.max_rel_err = r.rel_err;
      res.reports.push_back(std::move(r));
    }
  }
  return res;
}

}  // namespace qbil
