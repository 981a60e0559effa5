#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wlp::cli {

// Runs one CLI invocation. args excludes the program name. Commands:
// wlp, hilbert, homology, bockstein, ses, tensor, family, search.
// Exit codes: 0 success, 1 malformed input or arguments, 2 internal oracle
// mismatch (a closed-form predicate disagreed with the direct engine).
int run_command(const std::vector<std::string>& args, std::istream& in,
                std::ostream& out, std::ostream& err);

}  // namespace wlp::cli
