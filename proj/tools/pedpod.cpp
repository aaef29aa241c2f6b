#include <iostream>

#include "pedpod/cli.hpp"

int main(int argc, char **argv)
{
    return pedpod::cli::run(argc, argv, std::cout, std::cerr);
}
