#ifndef SBE_CLI_HPP
#define SBE_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace sbe {

// Exit codes: 0 success, 2 usage or input error, 3 node budget exhausted,
// 4 internal failure.
inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 2;
inline constexpr int exit_budget = 3;
inline constexpr int exit_internal = 4;

/// Runs one CLI invocation; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace sbe

#endif
