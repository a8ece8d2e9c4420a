#include <iostream>
#include <string>
#include <vector>

#include "idcode/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return idcode::cli::dispatch(args, std::cout, std::cerr);
}
