#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace solqsol {

// Exit codes: 0 ok, 1 failed verification, 2 usage error, 3 cap exceeded.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace solqsol
