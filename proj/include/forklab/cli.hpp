#pragma once

#include <iosfwd>

namespace forklab {

// Entry point of the forklab command. Exit codes: 0 success, 1 domain error
// (message on `err`), 2 usage error. `in` serves "--fork -".
int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace forklab
