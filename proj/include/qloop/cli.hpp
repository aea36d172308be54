#pragma once

#include <iosfwd>

namespace qloop {

// Subcommands build, criterion, irreducible, rmatrix, verify, grid.
// Exit codes: 0 success, 1 verification failure or inconclusive verdict, 2 usage error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qloop
