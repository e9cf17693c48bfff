#include "lieclass/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return lieclass::run_cli(argc, argv, std::cout, std::cerr);
}
