#include <iostream>
#include <string>
#include <vector>

#include "telsum/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return telsum::run_cli(args, std::cout, std::cerr);
}
