// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace prym {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 2;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitData = 65;

/// Runs the prym-hitchin command line. args excludes the program name.
/// Reports go to out, diagnostics to err; the return value is the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace prym
