#include <iostream>

#include "tgwa/cli/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return tgwa::cli::run_cli(args, std::cout, std::cerr);
}
