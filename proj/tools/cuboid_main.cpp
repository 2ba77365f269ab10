#include <iostream>
#include <string>
#include <vector>

#include "cuboid/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return cuboid::cli::run(args, std::cout, std::cerr);
}
