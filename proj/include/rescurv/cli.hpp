#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rescurv {

/// Runs one CLI command. `args` excludes the program name; `in` backs the
/// '-' input source. Returns 0 on success, 1 when `verify` finds a failing
/// check, 2 on input or usage errors.
int cli_run(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err);

} // namespace rescurv
