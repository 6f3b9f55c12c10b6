#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hyperpack::cli {

/// Process exit statuses.
enum ExitStatus : int {
    positive = 0,        ///< packed / constructed / certified / condition holds
    negative = 1,        ///< definitive negative answer
    unknown = 2,         ///< budget or restart limit reached
    usage_error = 64,    ///< bad flags or parameters
    input_error = 65,    ///< malformed input file
    io_error = 66,       ///< unreadable or unwritable file
    internal_error = 70  ///< arithmetic overflow or broken invariant
};

/// Runs one subcommand: check, pack, design, extremal, bounds or verify.
/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace hyperpack::cli
