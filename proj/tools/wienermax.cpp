#include <iostream>
#include <string>
#include <vector>

#include "wiener/cli.hpp"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  std::vector<std::string> args(argv + 1, argv + argc);
  return wiener::run_cli(args, std::cin, std::cout, std::cerr);
}
