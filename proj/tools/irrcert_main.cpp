#include <iostream>

#include "irrcert/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return irrcert::run(args, std::cout, std::cerr);
}
