#include <iostream>
#include <string>
#include <vector>

#include "lietools/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return lietools::run_cli(args, std::cout, std::cerr);
}
