#include <iostream>
#include <string>
#include <vector>

#include "structctl/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return structctl::cli::run(args, std::cout, std::cerr);
}
