#include <iostream>

#include "omegadet/cli.hpp"

int main(int argc, char** argv)
{
  return omegadet::run_cli(argc, argv, std::cout, std::cerr);
}
