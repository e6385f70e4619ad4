#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bfh::cli {

// Runs one command line. args excludes the program name. Returns the exit
// code: 0 success or verdict printed, 1 validation failure, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bfh::cli
