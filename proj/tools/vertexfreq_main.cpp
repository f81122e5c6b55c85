#include <iostream>
#include <string>
#include <vector>

#include "vertexfreq/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return vertexfreq::cli::run(args, std::cout, std::cerr, std::cin);
}
