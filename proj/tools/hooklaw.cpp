#include "hooklaw/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    return hooklaw::cli::dispatch(argc, argv, std::cout, std::cerr);
}
