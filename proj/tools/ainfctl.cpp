#include <iostream>
#include <string>
#include <vector>

#include "ainf/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ainf::run_cli(args, std::cout, std::cerr);
}
