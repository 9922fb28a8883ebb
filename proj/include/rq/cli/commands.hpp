#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace rq::cli {

enum ExitStatus { kOk = 0, kFalse = 1, kError = 2 };

/// Runs one rqcas invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rq::cli
