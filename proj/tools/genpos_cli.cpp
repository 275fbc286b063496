#include <iostream>
#include <string>
#include <vector>

#include "genpos/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return genpos::run_cli(args, std::cout, std::cerr);
}
