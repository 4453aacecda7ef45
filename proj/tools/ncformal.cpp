#include <iostream>
#include <string>
#include <vector>

#include "ncformal/cliapp.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return ncformal::cli_run(args, std::cout, std::cerr);
}
