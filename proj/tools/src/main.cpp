#include <iostream>

#include "prlab/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return prlab::cli::dispatch(args, std::cout, std::cerr);
}
