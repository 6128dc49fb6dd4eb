#pragma once

#include <iosfwd>

namespace bcsum::cli {

/// Exit codes: 0 success (all checks pass), 1 a verification failed, 2 usage or domain error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace bcsum::cli
