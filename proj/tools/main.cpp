#include <iostream>
#include <string>
#include <vector>

#include "gencx/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv, argv + argc);
  return gencx::cli::run(args, std::cout, std::cerr);
}
