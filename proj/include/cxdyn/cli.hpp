#ifndef CXDYN_CLI_HPP
#define CXDYN_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace cxdyn::cli {

/// Exit statuses of `run`.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1; ///< library error, or a FAIL row in `reproduce`
inline constexpr int kExitUsage = 2;

/**
 * Entry point for `cxdyn <command> [flags]`, with argv[0] stripped.
 * Reports go to `out` (or to --out PATH), diagnostics to `err`.
 */
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace cxdyn::cli

#endif
