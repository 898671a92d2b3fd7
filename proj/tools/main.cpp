#include <iostream>
#include <string>
#include <vector>

#include "antisym/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return antisym::cli::run(args, std::cout, std::cerr);
}
