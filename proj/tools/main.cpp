#include <iostream>
#include <string>
#include <vector>

#include "slt/cli.hpp"

int main(int argc, char** argv) {
    return slt::run_cli(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
