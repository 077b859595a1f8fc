// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <ostream>

namespace qbil {

/// Exit codes: 0 all pass, 1 verification failure, 2 domain or usage error, 3 budget or precision error.
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace qbil
