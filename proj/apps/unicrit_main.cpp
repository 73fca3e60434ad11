#include <iostream>
#include <string>
#include <vector>

#include "unicrit/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return unicrit::run_cli(args, std::cout, std::cerr);
}
