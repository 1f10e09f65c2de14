#include <iostream>
#include <string>
#include <vector>

#include "tensor3/cli.hpp"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  std::vector<std::string> args(argv + 1, argv + argc);
  return t3::cli::run(args, std::cin, std::cout, std::cerr);
}
