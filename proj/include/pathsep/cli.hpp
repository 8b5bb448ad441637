#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pathsep {

/// Entry point behind the `pathsep` binary.  `args` excludes the program
/// name.  Returns 0 on success, 1 on a contract violation (reported with
/// the failing invariant's name), 2 on a usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pathsep
