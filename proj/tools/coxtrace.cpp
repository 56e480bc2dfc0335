#include <iostream>
#include <string>
#include <vector>

#include "coxtrace/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return coxtrace::cli::run(args, std::cout, std::cerr);
}
