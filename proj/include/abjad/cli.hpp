#ifndef ABJAD_CLI_HPP_
#define ABJAD_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace abjad::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsage = 2;

// Runs one invocation. `args` excludes the program name. When the command
// takes an input and no positional argument is given, the input is read
// from `in`.
int Run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace abjad::cli

#endif  // ABJAD_CLI_HPP_
