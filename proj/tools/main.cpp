#include <iostream>
#include <string>
#include <vector>

#include "perioknot/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return perioknot::run_cli(args, std::cout, std::cerr);
}
