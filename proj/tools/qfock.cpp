#include <iostream>

#include "qfock/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return qfock::run_cli(args, std::cout, std::cerr);
}
