#include <iostream>
#include <string>
#include <vector>

#include "synq/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return synq::run_cli(args, std::cout, std::cerr);
}
