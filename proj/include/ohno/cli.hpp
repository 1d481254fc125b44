#pragma once

// Command-line front end: eval, dual, verify and sweep.
//
// Exit status: 0 when every report passes, 1 when a report fails or a value
// does not converge, 2 on malformed input, 3 when a precondition fails.

#include <ostream>
#include <string>
#include <vector>

namespace ohno {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitDomain = 3;

/// `args` excludes the program name. OHNO_ZETA_MAX_TERMS, when set, replaces
/// the default truncation; --max-terms wins over it.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ohno
