#include <iostream>
#include <string>
#include <vector>

#include "cutcount_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return cutcount::cli::run(args, std::cout, std::cerr);
}
