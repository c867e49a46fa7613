#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace codeg {

// exit codes: 0 ok or PASS, 1 FAIL, 2 usage or input error, 3 INCONCLUSIVE
int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace codeg
