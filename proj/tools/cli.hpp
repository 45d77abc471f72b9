#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tensoralg::cli {

/// Exit codes: 0 success, 1 validation/parse/document errors or a failed
/// check, 2 numeric errors (singular matrix, superluminal speed, metric).
/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tensoralg::cli
