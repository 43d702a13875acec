#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace steencob::cli {

enum ExitCode : int {
    kSuccess = 0,
    kUsageError = 2,     // bad arguments, unparsable expression or word
    kSemanticError = 3,  // dimension mismatch, unsupported dimension, violated precondition
    kInternalError = 4,  // an invariant the mathematics guarantees failed
};

// Runs one command. `args` excludes the program name. Results go to `out`,
// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace steencob::cli
