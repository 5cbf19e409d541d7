#pragma once

#include <iosfwd>

namespace derange {

// Parses argv and executes one subcommand, writing results to out and
// diagnostics to err. Returns the process exit code: 0 on success, 1 for a
// verification failure or violated precondition, 2 for a usage error. Every
// failure prints its machine-readable error name on a line of its own before
// any prose.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace derange
