#include <iostream>
#include <string>
#include <vector>

#include "forestdyn/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const auto result = forestdyn::run_cli(args);
  std::cout << result.out;
  std::cerr << result.err;
  return result.status;
}
