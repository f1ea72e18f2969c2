#include <iostream>
#include <string>
#include <vector>

#include "dolbeault/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return dolbeault::cli::run(args, std::cout, std::cerr).exit_code();
}
