#include <iostream>

#include "qcap/cli.hpp"

int main(int argc, char** argv) {
    return qcap::cli_main(argc, argv, std::cout, std::cerr);
}
