#include <iostream>
#include <vector>

#include "conecert/cli_app.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return conecert::run_cli(args, std::cout, std::cerr);
}
