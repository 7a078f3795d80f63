#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lietools/report.hpp"

namespace lietools {

// Process exit codes.
inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitUnsupported = 3;

Report cmd_orbits(const std::string& type_text);
Report cmd_embed(const std::string& g_text, const std::string& r_text, std::optional<int> parameter);
Report cmd_report_appendix(int l_max);
Report cmd_lnd_verify(unsigned cap);

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lietools
