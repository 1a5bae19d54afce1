#include <iostream>
#include <string>
#include <vector>

#include "eqvb/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return eqvb::run_cli(args, std::cin, std::cout, std::cerr);
}
