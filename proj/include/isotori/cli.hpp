#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace isotori::cli {

/*
 * Entry point of the isotori tool. args[0] is the program name. JSON goes to
 * `out`, diagnostics to `err`; "-" as an input path reads `in`.
 *
 * Exit codes: 0 success or equivalent, 1 inequivalent (classify), 2 usage,
 * parse or precondition errors (with {"error": …} on `out`), 3 when the
 * symplectic and analytic verdicts disagree.
 */
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace isotori::cli
