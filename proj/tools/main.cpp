#include <iostream>
#include <string>
#include <vector>

#include "monader/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return monader::run_cli(args, std::cout, std::cerr);
}
