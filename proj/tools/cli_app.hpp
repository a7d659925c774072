#pragma once

#include <iosfwd>

namespace hawkw_cli {

// Entry point of the command line tool. Exit codes: 0 success,
// 1 verification failure, 2 usage or I/O error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hawkw_cli
