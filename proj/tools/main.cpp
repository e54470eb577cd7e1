#include <iostream>
#include <string>
#include <vector>

#include "aulist/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return aulist::run(args, std::cout, std::cerr);
}
