#include "codeg/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return codeg::run(args, std::cout, std::cerr);
}
