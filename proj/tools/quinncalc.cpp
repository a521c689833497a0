#include <iostream>

#include "quinn/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return quinn::cli::run(args, std::cout, std::cerr);
}
