#include <iostream>

#include "v1ss/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return v1ss::run(args, std::cout, std::cerr);
}
