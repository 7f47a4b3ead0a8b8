#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace annular {

/**
 * Runs one command-line invocation; args excludes the program name.
 * Returns 0 on success, 1 when a verification or oracle check reports
 * failures, and 2 on usage or computation errors.
 */
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace annular
