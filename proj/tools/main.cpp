#include <iostream>

#include "ffda/cli.hpp"

int main(int argc, char** argv) {
  return ffda::run_cli(argc, argv, std::cout, std::cerr);
}
