#include <iostream>

#include "higgsc/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return higgsc::run(args, std::cout, std::cerr);
}
