#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace twobridge {

/// Entry point behind the twobridge executable, separated for testing.
/// args excludes the program name. Returns the process exit status:
/// 0 success, 1 invariant violation or enumeration mismatch, 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace twobridge
