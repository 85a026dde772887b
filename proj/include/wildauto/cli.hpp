#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wildauto {

/// Entry point behind the binary: parses argv, dispatches subcommands,
/// writes reports to `out` and diagnostics to `err`.
/// Exit codes: 0 success, 1 domain error, 2 malformed input / usage.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wildauto
