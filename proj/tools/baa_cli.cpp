#include <iostream>

#include "baa/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return baa::run(args, std::cout, std::cerr);
}
