#include <iostream>
#include <string>
#include <vector>

#include "permideal/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return permideal::run_cli(args, std::cout, std::cerr);
}
