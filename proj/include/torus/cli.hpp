#pragma once

#include <ostream>
#include <span>
#include <string>

namespace torus::cli {

/// Runs one command line (without the program name). Returns 0 on success,
/// 1 when a verify suite reports a failure, 2 on usage errors.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace torus::cli
