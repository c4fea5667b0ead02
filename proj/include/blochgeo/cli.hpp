#pragma once

// Command-line front end binding all modules into reproducible commands.
// Exit codes: 0 success, 1 usage/validation error, 2 audit violation.

#include <iostream>
#include <string>
#include <vector>

namespace blochgeo::cli {

int run(const std::vector<std::string>& args, std::ostream& out = std::cout,
        std::ostream& err = std::cerr);

}  // namespace blochgeo::cli
