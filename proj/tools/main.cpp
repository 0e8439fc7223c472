#include <iostream>
#include <vector>

#include "pnpersist/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return pnp::run_command(args, std::cout, std::cerr);
}
