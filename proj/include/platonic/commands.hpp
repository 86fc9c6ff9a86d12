#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace platonic {

/// Runs the command-line tool on `args` (without the program name).
/// Grammar: <verb> <diagram> [left|right] [flags], verbs info, faces, meet,
/// enumerate, export, verify. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace platonic
