// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace qbil {

enum class IdentityId {
  MAIN1, MAIN2, COR1, COR2, LEM1, CO3, CO4, CO5, CORL3, CORL4, COROL1, CO6, CO7, CORO1, CORO2, P1,
  PHYS1, PHYS2, RAMANUJAN, QBINOM, JTP, THETA_INV, THETA_QDIFF, HORN, DOUGALL, LIMIT_MAIN
};

/// Which parameter record an identity takes.
enum class ParamKind { Constrained, Physics, Ramanujan, QBinom, Theta, Pair, Horn, Dougall, LimitMain };

struct IdentityInfo {
  IdentityId id;
  std::string_view tag;
  ParamKind kind;
  std::string_view location;
  std::string_view anchor;
  std::string_view note;  // normalization applied to the printed statement, if any
  bool formal;            // has an exact formal-series check
};

const std::vector<IdentityInfo>& registry();
const IdentityInfo& info(IdentityId id);
std::string_view tag(IdentityId id);
/// Case-sensitive tag lookup; ParseError for unknown tags.
IdentityId parse_identity(std::string_view tag);

}  // namespace qbil
