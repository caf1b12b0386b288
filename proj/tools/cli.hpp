#pragma once

#include <iosfwd>

namespace opforge::cli {

/// Exit codes: 0 ok, 1 a check failed, 2 usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace opforge::cli
