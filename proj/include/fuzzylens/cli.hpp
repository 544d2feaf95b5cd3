#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fuzzylens {

/// Entry point of the `fuzzylens` tool. Returns 0 on success, 1 on a
/// runtime failure, 2 on a usage error. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int cli_main(int argc, char** argv);

}  // namespace fuzzylens
