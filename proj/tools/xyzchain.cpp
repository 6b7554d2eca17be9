#include <iostream>
#include <string>
#include <vector>

#include "xyz/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return xyz::run_cli(args, std::cout, std::cerr);
}
