#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hkappa::cli {

/// Exit statuses of the command-line front end.
enum Status : int {
    kOk = 0,
    kUsage = 1,
    kSchema = 2,
    kConvergence = 3,
    kDomain = 4,
};

/// Runs one command. `args` excludes the program name. Reports go to `out`
/// only on success; failures print a JSON error object to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hkappa::cli
