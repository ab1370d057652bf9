#pragma once

#include <iosfwd>

namespace convpoly {

/// Entry point of the command-line tool. Exit codes: 0 success, 1 a
/// verification failed, 2 usage error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace convpoly
