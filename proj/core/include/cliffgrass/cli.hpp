#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cliffgrass::cli {

/// Dispatches the cliffgrass subcommands (emit-basis, verify, poincare,
/// phi). Exit codes: 0 success or all checks passed, 1 verification failure,
/// 2 usage or validation error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cliffgrass::cli
