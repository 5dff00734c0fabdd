#include <iostream>
#include <string>
#include <vector>

#include "curvint/cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return curvint::cli::run(args, std::cout, std::cerr);
}
