#pragma once

// Entry point of the `fuglede` command-line tool, kept in the library so
// tests can drive it in-process.
//
// Exit codes: 0 ok, 1 verification failure (property absent, pair rejected,
// mismatch or discrepancy found), 2 usage or parse error, 3 capacity error.

#include <iosfwd>
#include <string>
#include <vector>

#include "fuglede/charsum.hpp"
#include "fuglede/oracle.hpp"

namespace fuglede {

enum ExitCode : int { kExitOk = 0, kExitFailure = 1, kExitUsage = 2, kExitCapacity = 3 };

/// `args` excludes the program name. `zero_test` replaces the counting zero
/// test in oracle-compare (for negative controls).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            const ZeroTest& zero_test = is_zero_equidist);

}  // namespace fuglede
