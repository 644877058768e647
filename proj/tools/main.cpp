#include <iostream>
#include <string>
#include <vector>

#include "fibcalc/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    const fibcalc::CommandResult res = fibcalc::run_command(args);
    if (!res.out.empty()) std::cout << res.out << '\n';
    if (!res.err.empty()) std::cerr << res.err << '\n';
    return res.exit_code;
}
