#include <iostream>

#include "rocoh_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return rocoh::cli::run(args, std::cout, std::cerr);
}
