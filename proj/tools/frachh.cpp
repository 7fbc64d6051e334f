#include "frachh/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    return frachh::cli::main_entry(argc, argv, std::cout, std::cerr);
}
