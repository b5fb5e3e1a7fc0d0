#include <iostream>
#include <string>
#include <vector>

#include "qroots/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return qroots::cli::run(args, std::cout, std::cerr, std::cin);
}
