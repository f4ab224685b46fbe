#include <iostream>
#include <string>
#include <vector>

#include "abjad/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return abjad::cli::Run(args, std::cin, std::cout, std::cerr);
}
