#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sigrho::cli {

/// Exit codes: 0 success, 1 bad input, 2 verification failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sigrho::cli
