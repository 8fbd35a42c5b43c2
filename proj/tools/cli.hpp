#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace p2coh::cli {

// args excludes the program name.  Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace p2coh::cli
