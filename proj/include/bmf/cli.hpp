#pragma once

#include <string>
#include <vector>

namespace bmf {

/// Runs one CLI invocation. Exit codes: 0 success, 1 usage error, 2
/// malformed input file, 3 concept-cap exceeded.
int dispatch(int argc, const char* const* argv);

/// Same, for callers holding the arguments (without the program name) as a
/// vector.
int dispatch(const std::vector<std::string>& args);

}  // namespace bmf
