#include <iostream>
#include <string>
#include <vector>

#include "ghdist/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ghdist::cli::run_command(args, std::cout);
}
