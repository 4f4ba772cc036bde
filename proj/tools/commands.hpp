#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace flagcalc::cli {

/// Exit codes of the flagcalc executable.
enum ExitCode : int {
    ok = 0,
    usage_error = 2,
    precondition_violation = 3,
    internal_error = 4,
};

/// Runs one subcommand. `args` excludes the program name. The result JSON
/// (or an error object {"code": ..., "message": ...}) is written to `out`,
/// or to the file named by --out, which is replaced atomically.
int run(const std::vector<std::string>& args, std::ostream& out);

}  // namespace flagcalc::cli
