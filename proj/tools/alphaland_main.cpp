#include <iostream>
#include <string>
#include <vector>

#include "alphaland/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return alphaland::cli::run(args, std::cout, std::cerr);
}
