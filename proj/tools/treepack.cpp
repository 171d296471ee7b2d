#include <iostream>
#include <string>
#include <vector>

#include "stp/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return stp::cli::run(args, std::cout, std::cerr);
}
