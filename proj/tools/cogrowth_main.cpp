#include <iostream>
#include <string>
#include <vector>

#include "cogrowth/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cogrowth::run_cli(args, std::cout, std::cerr);
}
