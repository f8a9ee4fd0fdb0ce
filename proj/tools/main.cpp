#include <iostream>
#include <string>
#include <vector>

#include "bang/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return bang::cli::run(args, std::cout, std::cerr, std::cin);
}
