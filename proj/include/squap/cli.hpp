#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace squap::cli {

enum ExitCode : int { ok = 0, validation_failure = 1, parse_failure = 2, usage_error = 3 };

/// Runs one command. `args` excludes the program name. Reads SQUAP_CATALOG
/// from the environment when --catalog is not given.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace squap::cli
