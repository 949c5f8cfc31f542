#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace csg::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kVerificationFailed = 1;
inline constexpr int kInputError = 2;

// Parses `args` (without the program name) and runs one subcommand.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// verify-paper; `golden_path` empty means the embedded table.
int verify_paper(const std::string& golden_path, const std::string& only, bool as_json, std::ostream& out,
                 std::ostream& err);

}  // namespace csg::cli
