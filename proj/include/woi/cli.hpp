#pragma once

// Command-line front end.  `run` takes the argument vector without the
// program name, writes JSON to `out` and diagnostics to `err`, and returns
// the process exit code: 0 for success (equality, pass, plain reports),
// 1 for a negative verification result (powers differ, sweep violations,
// pipeline disagreement), 2 for usage, file, or cap errors.

#include <iosfwd>
#include <string>
#include <vector>

namespace woi::cli {

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace woi::cli
