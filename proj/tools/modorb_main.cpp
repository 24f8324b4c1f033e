#include <iostream>
#include <string>
#include <vector>

#include "modorb/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return modorb::cli::run(args, std::cout, std::cerr);
}
