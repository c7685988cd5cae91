#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lienil {

/// Runs one CLI invocation. Exit code 0 on success or verification
/// pass, 1 on verification fail, 2 on usage or parse errors; never
/// throws on bad input.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace lienil
