#include <iostream>
#include <string>
#include <vector>

#include "lambdalat/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return lambdalat::run(args, std::cout, std::cerr);
}
