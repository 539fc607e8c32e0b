#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fusionbench {

// args excludes the program name. Exit codes: 0 pass, 1 validation or
// verification failure, 2 input or usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fusionbench
