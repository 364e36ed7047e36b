#include <iostream>
#include <vector>

#include "premod/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return premod::run_cli(args, std::cout, std::cerr);
}
