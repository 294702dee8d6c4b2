#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace antipodal::cli {

/// Runs the `antipodal` command line with `args` (args[0] is the program
/// name). Returns the process exit code.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace antipodal::cli
