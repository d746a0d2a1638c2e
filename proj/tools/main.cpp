#include <iostream>
#include <string>
#include <vector>

#include "permcensus/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return permcensus::run_cli(args, std::cout, std::cerr);
}
