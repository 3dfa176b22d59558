#include <iostream>

#include "crgs/cli/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return crgs::cli::run(args, std::cout, std::cerr);
}
