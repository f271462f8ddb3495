#include <iostream>
#include <string>
#include <vector>

#include "solqsol/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return solqsol::run_cli(args, std::cout, std::cerr);
}
