#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace aulist {

// Command-line front end. `args` excludes the program name. Returns the
// process exit status: 0 on success, 1 on parse or verification failure,
// 2 on precondition violations.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace aulist
