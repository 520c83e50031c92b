#include <iostream>
#include <string>
#include <vector>

#include "stab2cy/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return stab2cy::cli::run(args, std::cout, std::cerr);
}
