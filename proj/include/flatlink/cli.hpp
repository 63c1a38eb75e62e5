#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace flatlink::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitInvalidCode = 2;

// Runs the command line `args` (without the program name). Answers such as
// "no filamentation" or "nontrivial link" exit 0; usage and parse errors exit 1;
// an input that is not a valid Gauss code exits 2.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace flatlink::cli
