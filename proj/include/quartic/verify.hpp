#pragma once

#include <string>
#include <vector>

#include "quartic/report.hpp"

namespace quartic {

std::vector<std::string> verify_suite_names();

/// Runs one of the named self-check suites ("identities", "convergence",
/// "landen-symbolic") or "all", and reports every check with its worst
/// residual.  Throws std::invalid_argument for an unknown suite name.
RunReport run_verify(const std::string& suite);

}  // namespace quartic
