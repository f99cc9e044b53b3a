#include <iostream>
#include <string>
#include <vector>

#include "chenlie/io.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return chenlie::run(args, std::cout, std::cerr);
}
