#include <iostream>
#include <string>
#include <vector>

#include "grpoly/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return grpoly::cli::run(args, std::cout, std::cerr);
}
