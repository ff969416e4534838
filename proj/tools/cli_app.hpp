#pragma once

#include <iosfwd>

namespace quartic::cli {

/// Parses and runs one command line against the given streams.  Returns the
/// process exit code: 0 on success, 1 when a reported check failed or an
/// iteration missed its target, 2 for usage or domain errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace quartic::cli
