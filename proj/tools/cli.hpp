#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cmgen::cli {

/// Runs one subcommand. Returns 0 on success, 1 on a data or module error,
/// 2 on a usage error. Results go to `--out` or `out`; diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cmgen::cli
