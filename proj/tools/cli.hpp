#ifndef TMLAB_TOOLS_CLI_HPP
#define TMLAB_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace tmlab::cli {

enum ExitCode : int {
    kOk = 0,
    kIncomplete = 2,
    kInvalidInput = 3,
    kCapExceeded = 4,
};

/// Runs one command line (without the program name). Data goes to `out`,
/// diagnostics and warnings to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tmlab::cli

#endif
