#include <iostream>

#include "rrbeck/cli.hpp"

int main(int argc, char** argv)
{
    return rrbeck::cli::main(argc, argv, std::cout, std::cerr);
}
