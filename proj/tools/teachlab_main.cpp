#include <iostream>

#include "teachlab/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  teachlab::CommandOutcome o = teachlab::dispatch(args);
  std::cout << o.out;
  std::cerr << o.err;
  return o.exit_code;
}
