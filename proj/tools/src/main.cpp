#include <iostream>
#include <string>
#include <vector>

#include "ordlen_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ordlen::cli::run(args, std::cout, std::cerr);
}
