#include <iostream>

#include "torlens/cli.hpp"

int main(int argc, char** argv) {
  return torlens::run_cli(argc, argv, std::cin, std::cout, std::cerr);
}
