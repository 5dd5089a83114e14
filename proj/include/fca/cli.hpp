#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fca {

/// Runs the command line tool. `args` excludes the program name. Data goes to
/// `out`, diagnostics to `err`. Returns 0 on success, 1 on a domain error
/// (reported as `ERROR <kind>: <detail>`), 2 on a usage error.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace fca
