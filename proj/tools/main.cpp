#include <iostream>

#include "subrack/cli.hpp"

int main(int argc, char** argv)
{
    return subrack::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}
