#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace qcat::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitVerificationFailure = 1;
inline constexpr int kExitUsage = 2;

/// Exact rational from "3/5", "-2", "0.41" or "1.5e-2". Throws
/// qcat::ParseError on anything else.
mpq_class parse_exact_rational(std::string_view text);

/// Verma level cap: QCAT_LEVEL_CAP if set to a positive integer, else the
/// library default. Throws qcat::ParseError on a malformed value.
int level_cap_from_env();

/// Runs one invocation. `args` excludes the program name. Results go to
/// `out` (or to --out FILE), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qcat::cli
