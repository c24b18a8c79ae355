#include <iostream>

#include "bimodulus/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return bimodulus::run_command(args, std::cout, std::cerr);
}
