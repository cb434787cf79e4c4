#pragma once

#include <iosfwd>

namespace digitop::cli {

// Exit codes: 0 verified/true, 1 refuted/witness found, 2 usage or input
// error, 3 budget exceeded. The code reflects the semantic outcome, not
// merely process success.
constexpr int kExitVerified = 0;
constexpr int kExitRefuted = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace digitop::cli
