#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace bw::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;     // computation budget exhausted or construction failed
inline constexpr int kExitValidation = 2;  // bad arguments

// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bw::cli
