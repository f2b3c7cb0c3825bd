#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wallscope::cli {

// Dispatches one subcommand. Exit status: 0 success, 1 domain error,
// 2 usage error (including malformed character literals).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wallscope::cli
