#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace permarith {

inline constexpr const char* kToolName = "permarith";
inline constexpr const char* kToolVersion = "1.0.0";

// Exit codes: 0 success, 1 verification claim failed, 2 usage or malformed
// input, 3 search/threshold ended inconclusive (budget) or unresolved.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace permarith
