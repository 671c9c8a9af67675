#include <iostream>
#include <string>
#include <vector>

#include "brauer_workbench/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return bw::cli::run(args, std::cout, std::cerr);
}
