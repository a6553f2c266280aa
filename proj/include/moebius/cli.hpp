#pragma once

#include <iosfwd>

namespace moebius::cli {

/// Exit codes: 0 success, 1 verification failure, 2 invalid input.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace moebius::cli
