#include <iostream>

#include <kaleido/cli.hpp>

int main(int argc, char** argv) {
    return kaleido::run_cli(argc, argv, std::cout, std::cerr);
}
