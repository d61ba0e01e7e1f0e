#include <iostream>

#include "superbw/cli.hpp"

int main(int argc, char** argv) {
  return superbw::run_cli(argc, argv, std::cout, std::cerr);
}
