#include <iostream>
#include <string>
#include <vector>

#include "powres/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    try {
        return powres::run_command(args, std::cout, std::cerr);
    } catch (const std::exception& e) {
        // Anything escaping run_command is an implementation fault, not a usage error.
        std::cerr << "internal error: " << e.what() << '\n';
        return powres::exit_violation;
    }
}
