#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace zetamap::cli {

/// Runs the command line tool. Exit status: 0 on success, 1 when `verify`
/// finds a counterexample, 2 for malformed input (encodings or flags).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zetamap::cli
