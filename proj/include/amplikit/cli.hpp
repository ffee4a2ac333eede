#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace amplikit {

/// Full command-line front end. Returns the process exit code:
/// 0 success / condition satisfied, 1 condition unsatisfied or
/// verification failure, 2 usage or input errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace amplikit
