#include <iostream>
#include <string>
#include <vector>

#include "lovelieb/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return lovelieb::run_cli(args, std::cout, std::cerr);
}
