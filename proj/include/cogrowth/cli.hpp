#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cogrowth {

// Full command-line front end; args excludes the program name. Returns the
// process exit code: 0 ok, 1 parse/usage error, 2 alphabet error, 3 method
// disagreement.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cogrowth
