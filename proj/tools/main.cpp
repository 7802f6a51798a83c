#include <iostream>

#include "uvbraid/cli.hpp"

int main(int argc, char **argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return uvbraid::run_cli(args, std::cout, std::cerr);
}
