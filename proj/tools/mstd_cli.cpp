#include <iostream>
#include <string>
#include <vector>

#include "mstd/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return mstd::cli::run(args, std::cout, std::cerr);
}
