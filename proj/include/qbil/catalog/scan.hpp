// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qbil/catalog/check.hpp"

namespace qbil {

struct ScanConfig {
  std::vector<IdentityId> identities;
  long samples = 20;
  std::uint64_t seed = 42;
  std::vector<double> q_grid{0.3, 0.5, 0.7};
  unsigned threads = 0;  // 0 = hardware concurrency
};

struct ScanSummary {
  long total = 0, passed = 0, failed = 0, indeterminate = 0, reported = 0;
  long budget_errors = 0, domain_errors = 0;
  Real max_rel_err{64};
  std::vector<std::string> failures;  // "TAG#sample"
};

struct ScanResult {
  std::vector<IdentityReport> reports;  // ordered by identity, sample, q
  ScanSummary summary;
};

/// Draws in-domain parameters for sample `index` of `id`; identical for identical (seed, id, index).
/// One record per q in the grid (one in total for identities without q).
std::vector<IdentityParams> sample_params(IdentityId id, std::uint64_t seed, long index,
                                          const std::vector<double>& q_grid, const PrecisionContext& ctx);

ScanResult scan(const ScanConfig& cfg, const PrecisionContext& ctx);

}  // namespace qbil
