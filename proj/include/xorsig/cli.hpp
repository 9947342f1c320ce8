#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace xorsig::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kParseError = 2,
    kEngineRefusal = 3,
    kInternalError = 4,
};

// Entry point of the `xorsig` tool. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace xorsig::cli
