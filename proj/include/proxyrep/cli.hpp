#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace proxyrep {

// Command-line driver. Exit codes: 0 success, 1 verification failure
// (a Violation was found), 2 usage or input errors.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace proxyrep
