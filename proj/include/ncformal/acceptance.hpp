#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ncformal::acceptance {

struct Result {
    int number;
    std::string name;
    bool pass;
    std::string detail;  // failure explanation, empty on pass
};

// Runs every acceptance criterion, printing one pass/fail line per criterion
// to `out` as it goes.
std::vector<Result> run_all(std::ostream& out);

bool all_pass(const std::vector<Result>& results);

}  // namespace ncformal::acceptance
