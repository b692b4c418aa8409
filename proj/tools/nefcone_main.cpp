#include <iostream>
#include <string>
#include <vector>

#include "nefcone/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return nefcone::cli::run_command(args, std::cout, std::cerr);
}
