#include <iostream>
#include <string>
#include <vector>

#include "bracelab/cli/run.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return bracelab::cli::run(std::move(args), std::cout, std::cerr);
}
