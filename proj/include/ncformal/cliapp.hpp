#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ncformal {

// Command line entry point, separated from main() so tests can capture
// output. Exit codes: 0 success, 1 parse error, 2 contract violation,
// 3 resource cap exceeded.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ncformal
