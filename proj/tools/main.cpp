#include <iostream>

#include "signed_extremal/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return sx::run_cli(args, std::cout, std::cerr);
}
