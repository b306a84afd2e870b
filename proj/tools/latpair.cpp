#include <iostream>
#include <string>
#include <vector>

#include "latpair/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return latpair::cli::run_cli(args, std::cout, std::cerr);
}
