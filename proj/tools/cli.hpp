#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hprod::cli {

/// Exit codes of `dispatch`.
enum Exit : int { ok = 0, failure = 1, usage = 2 };

/// Runs one command line (without the program name). Primary outputs go to
/// files named by the flags or to `out`; diagnostics go to `err`.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hprod::cli
