#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace modorb::cli {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;

// Runs one subcommand. args excludes the program name. Output goes to out,
// diagnostics to err. Returns 0 on success, 1 when a check fails, 2 on input
// errors. Default tolerances can be overridden through MODORB_EPS and
// MODORB_EPS_INT.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace modorb::cli
