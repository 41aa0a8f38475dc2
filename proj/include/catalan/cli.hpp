#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace catalan::cli {

// Run the command line given by `args` (without the program name), writing
// results to `out` and diagnostics/errors to `err`. Output is byte-identical
// for identical args. Exit codes: 0 success, 2 usage or domain error
// (named), 1 internal failure.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace catalan::cli
