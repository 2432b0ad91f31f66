#include "excc/appcli.hpp"

#include <iostream>
#include <string>
#include <vector>

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    const excc::CliResult result = excc::run(args);
    std::cout << result.out << '\n';
    return result.exit_code;
}
