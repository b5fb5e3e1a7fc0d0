#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qroots::cli {

// Exit codes: 0 success, 1 invalid input (syntax errors included),
// 2 method not applicable (NotSupported).
inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitNotSupported = 2;

// Runs one command line. args excludes the program name. The expression is
// read from `in` when it is omitted or given as "-".
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        std::istream& in);

} // namespace qroots::cli
