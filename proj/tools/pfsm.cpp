#include <iostream>

#include "pfsm/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return pfsm::run(args, std::cout, std::cerr);
}
