#include <iostream>
#include <string>
#include <vector>

#include "sciento/cli.h"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return sciento::run_cli(args, std::cout, std::cerr);
}
