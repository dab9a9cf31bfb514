#include <iostream>

#include "bow/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return bow::runCli(args, std::cout, std::cerr);
}
